#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "render.hpp"
#include "ttk/oracle.hpp"

namespace ttk::cli {

namespace {

std::string sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+" || s == "+1" || s == "1") return Sign::Plus;
  if (s == "minus" || s == "-" || s == "-1") return Sign::Minus;
  throw ParamError("sign must be plus or minus (got " + s + ")");
}

nlohmann::ordered_json delta_json(const LaurentPoly& p) {
  // Exponents in decreasing order, keys as decimal strings.
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) out[std::to_string(it->first)] = it->second;
  return out;
}

std::string csv_delta(const LaurentPoly& p) {
  std::string out;
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!out.empty()) out += ';';
    out += std::to_string(it->first) + ':' + std::to_string(it->second);
  }
  return out;
}

std::optional<bool> predicate_of(const TwistedTorusParams& params) {
  try {
    return theorem1_predicate(params);
  } catch (const PredicateNotApplicable&) {
    return std::nullopt;
  }
}

}  // namespace

KnotReport compute_report(const TwistedTorusParams& params, const BuildOptions& options) {
  KnotReport rep;
  rep.params = params;
  const GenusOneDiagram d = build_diagram(params, options);
  KnotComplex complex = build_complex(d, enumerate_bigons(d));
  check_complex(complex);
  rep.result = classify(complex);
  check_rank_symmetry(rep.result.ranks);
  hf_s3_check(rep.result.complex);
  rep.generators = static_cast<int>(complex.generators.size());
  rep.total_hat_rank = rep.result.ranks.total();
  rep.genus = rep.result.ranks.top_alexander();
  rep.delta = alexander_poly(rep.result.ranks);
  rep.burau = burau_alexander(braid_word(params));
  rep.predicate = predicate_of(params);
  return rep;
}

nlohmann::ordered_json report_json(const KnotReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.params.p;
  j["k"] = r.params.k;
  j["sign"] = sign_name(r.params.sign);
  j["s"] = r.params.s;
  j["r"] = r.params.r;
  j["q"] = r.params.q;
  j["generators"] = r.generators;
  j["total_hat_rank"] = r.total_hat_rank;
  j["genus"] = r.genus;
  j["delta"] = delta_json(r.delta);
  j["lspace"] = to_string(r.result.is_lspace);
  j["reason"] = to_string(r.result.reason);
  if (r.predicate) {
    j["predicate"] = *r.predicate;
    j["agree"] = r.result.is_lspace != LSpace::Undecided && (r.result.is_lspace == LSpace::Yes) == *r.predicate;
  } else {
    j["predicate"] = nullptr;
    j["agree"] = nullptr;
  }
  return j;
}

std::vector<SweepCell> sweep_grid(int p_max, int k_max, int r_max) {
  std::vector<SweepCell> grid;
  for (int p = 2; p <= p_max; ++p)
    for (int k = 1; k <= k_max; ++k)
      for (Sign sign : {Sign::Plus, Sign::Minus})
        for (int s = 1; s <= p - 1; ++s)
          for (int r = 1; r <= r_max; ++r) {
            SweepCell c{p, k, s, r, sign, {}};
            if (k * p + static_cast<int>(sign) == 1)
              c.skip_reason = "q = 1";
            else if (s == 1 && p >= 3)
              c.skip_reason = "s = 1 with p >= 3";
            grid.push_back(c);
          }
  return grid;
}

std::vector<SweepRow> run_sweep(const std::vector<SweepCell>& grid, const BuildOptions& options, unsigned jobs) {
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      SweepRow& row = rows[i];
      row.index = i;
      row.cell = grid[i];
      if (!row.cell.skip_reason.empty()) {
        row.status = "skipped";
        continue;
      }
      try {
        const auto params = make_params(row.cell.p, row.cell.k, row.cell.sign, row.cell.s, row.cell.r);
        row.report = compute_report(params, options);
        const KnotReport& rep = *row.report;
        row.status = "ok";
        row.agree = rep.predicate && rep.result.is_lspace != LSpace::Undecided &&
                    (rep.result.is_lspace == LSpace::Yes) == *rep.predicate;
        row.delta_matches_oracle = rep.delta == rep.burau;
      } catch (const std::exception& e) {
        row.status = "error";
        row.error = e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

const char* const kSweepCsvHeader =
    "index,p,k,sign,s,r,q,status,generators,total_hat_rank,genus,lspace,reason,predicate,agree,oracle_match,delta";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    const auto& c = row.cell;
    const int q = c.k * c.p + static_cast<int>(c.sign);
    out << row.index << ',' << c.p << ',' << c.k << ',' << sign_name(c.sign) << ',' << c.s << ',' << c.r << ',' << q
        << ',' << row.status << ',';
    if (row.report) {
      const auto& r = *row.report;
      out << r.generators << ',' << r.total_hat_rank << ',' << r.genus << ',' << to_string(r.result.is_lspace) << ','
          << to_string(r.result.reason) << ',' << (r.predicate ? (*r.predicate ? "yes" : "no") : "n/a") << ','
          << (row.agree ? "yes" : "no") << ',' << (row.delta_matches_oracle ? "yes" : "no") << ','
          << csv_delta(r.delta);
    } else {
      out << ",,,,,,,,";
    }
    out << '\n';
  }
}

nlohmann::ordered_json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    if (row.report) {
      j = report_json(*row.report);
      j["oracle_match"] = row.delta_matches_oracle;
    } else {
      const auto& c = row.cell;
      j["p"] = c.p;
      j["k"] = c.k;
      j["sign"] = sign_name(c.sign);
      j["s"] = c.s;
      j["r"] = c.r;
      j["q"] = c.k * c.p + static_cast<int>(c.sign);
    }
    j["index"] = row.index;
    j["status"] = row.status;
    if (row.status == "skipped") j["skip_reason"] = row.cell.skip_reason;
    if (row.status == "error") j["error"] = row.error;
    arr.push_back(std::move(j));
  }
  return arr;
}

bool row_fails(const SweepRow& row) {
  if (row.status == "skipped") return false;
  if (row.status != "ok") return true;
  return !row.agree || !row.delta_matches_oracle;
}

namespace {

struct KnotFlags {
  int p = 0, k = 1, s = 1, r = 0;
  std::string sign = "plus";
  int seed = 2;
};

void add_knot_flags(CLI::App* app, KnotFlags& f) {
  app->add_option("--p", f.p, "strand count")->required();
  app->add_option("--k", f.k, "q = k*p + sign")->default_val(1);
  app->add_option("--sign", f.sign, "plus or minus")->default_val("plus");
  app->add_option("--s", f.s, "twisted strands, 0 < s < p")->default_val(1);
  app->add_option("--r", f.r, "full twists")->default_val(0);
}

void add_seed_flag(CLI::App* app, int& seed) {
  app->add_option("--seed-denominator", seed,
                  "corridor half-width is 2^-j of the clearance to the other base point")
      ->default_val(2)
      ->check(CLI::Range(1, 16));
}

BuildOptions options_for(int seed) {
  BuildOptions o;
  o.corridor_exponent = seed;
  return o;
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

int emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return 0;
  }
  return write_text(path, text, err) ? 0 : 1;
}

std::string hfk_text(const KnotReport& r) {
  std::ostringstream o;
  o << r.params.label() << '\n';
  o << "generators " << r.generators << '\n';
  o << "generator alexander maslov\n";
  for (const auto& g : r.result.complex.generators) o << g.id << ' ' << g.alexander << ' ' << g.maslov << '\n';
  o << "arrows (from to n_z n_w)\n";
  for (const auto& a : r.result.complex.arrows) o << a.from << ' ' << a.to << ' ' << a.n_z << ' ' << a.n_w << '\n';
  o << "ranks (maslov alexander rank)\n";
  for (const auto& [key, rank] : r.result.ranks.ranks) o << key.first << ' ' << key.second << ' ' << rank << '\n';
  o << "total_hat_rank " << r.total_hat_rank << '\n';
  o << "genus " << r.genus << '\n';
  o << "delta " << r.delta.to_string() << '\n';
  return o.str();
}

nlohmann::ordered_json hfk_json(const KnotReport& r) {
  nlohmann::ordered_json j = report_json(r);
  nlohmann::ordered_json gens = nlohmann::ordered_json::array(), arrows = nlohmann::ordered_json::array(),
                         ranks = nlohmann::ordered_json::array();
  for (const auto& g : r.result.complex.generators)
    gens.push_back({{"id", g.id}, {"alexander", g.alexander}, {"maslov", g.maslov}});
  for (const auto& a : r.result.complex.arrows)
    arrows.push_back({{"from", a.from}, {"to", a.to}, {"n_z", a.n_z}, {"n_w", a.n_w}});
  for (const auto& [key, rank] : r.result.ranks.ranks)
    ranks.push_back({{"maslov", key.first}, {"alexander", key.second}, {"rank", rank}});
  j["complex"] = {{"generators", gens}, {"arrows", arrows}};
  j["ranks"] = ranks;
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot Floer homology of twisted torus knots from genus-one diagrams", "ttk"};
  app.require_subcommand(1);

  KnotFlags kf;
  std::string out_path;
  bool as_json = false, as_csv = false;

  auto* classify_cmd = app.add_subcommand("classify", "classify one knot, print JSON");
  add_knot_flags(classify_cmd, kf);
  add_seed_flag(classify_cmd, kf.seed);
  classify_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  auto* hfk_cmd = app.add_subcommand("hfk", "gradings, ranks and Alexander polynomial of one knot");
  add_knot_flags(hfk_cmd, kf);
  add_seed_flag(hfk_cmd, kf.seed);
  hfk_cmd->add_option("--out", out_path, "write to a file instead of stdout");
  hfk_cmd->add_flag("--json", as_json, "JSON instead of text");

  int p_max = 4, k_max = 1, r_max = 2;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep_cmd = app.add_subcommand("sweep", "classify a parameter grid, compare with the predicate");
  sweep_cmd->add_option("--p-max", p_max, "largest p")->default_val(4)->check(CLI::Range(2, 12));
  sweep_cmd->add_option("--k-max", k_max, "largest k")->default_val(1)->check(CLI::Range(1, 6));
  sweep_cmd->add_option("--r-max", r_max, "largest r")->default_val(2)->check(CLI::Range(1, 6));
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sweep_cmd->add_option("--out", out_path, "write <path>.csv and <path>.json");
  auto* csv_flag = sweep_cmd->add_flag("--csv", as_csv, "print CSV to stdout (default)");
  sweep_cmd->add_flag("--json", as_json, "print JSON to stdout")->excludes(csv_flag);
  add_seed_flag(sweep_cmd, kf.seed);

  auto* oracle_cmd = app.add_subcommand("oracle", "Alexander polynomial from the reduced Burau representation");
  add_knot_flags(oracle_cmd, kf);
  oracle_cmd->add_flag("--json", as_json, "JSON instead of text");

  std::string target;
  std::string svg_path;
  auto* render_cmd = app.add_subcommand("render", "SVG of the diagram or the staircase");
  render_cmd->add_option("target", target, "diagram or staircase")
      ->required()
      ->check(CLI::IsMember({"diagram", "staircase"}));
  add_knot_flags(render_cmd, kf);
  add_seed_flag(render_cmd, kf.seed);
  render_cmd->add_option("--svg", svg_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sweep_cmd) {
      const auto grid = sweep_grid(p_max, k_max, r_max);
      const auto rows = run_sweep(grid, options_for(kf.seed), jobs);
      std::ostringstream csv;
      write_sweep_csv(csv, rows);
      const std::string json = sweep_json(rows).dump(2) + "\n";
      if (!out_path.empty()) {
        if (!write_text(out_path + ".csv", csv.str(), err) || !write_text(out_path + ".json", json, err)) return 1;
      }
      if (as_json)
        out << json;
      else if (as_csv || out_path.empty())
        out << csv.str();
      long ok = 0, skipped = 0, failed = 0;
      for (const auto& row : rows) {
        if (row.status == "skipped") ++skipped;
        else if (row_fails(row)) {
          ++failed;
          err << "row " << row.index << " K(" << row.cell.p << ',' << row.cell.k * row.cell.p + int(row.cell.sign)
              << ';' << row.cell.s << ',' << row.cell.r << "): "
              << (row.status == "error" ? row.error
                  : !row.delta_matches_oracle ? std::string("delta differs from the Burau oracle")
                  : row.report->result.is_lspace == LSpace::Undecided ? std::string("undecided")
                                                                       : std::string("disagrees with the predicate"))
              << '\n';
        } else {
          ++ok;
        }
      }
      err << "sweep: " << rows.size() << " rows, " << ok << " agree, " << failed << " fail, " << skipped
          << " skipped\n";
      return failed == 0 ? 0 : 1;
    }

    const auto params = make_params(kf.p, kf.k, parse_sign(kf.sign), kf.s, kf.r);

    if (*oracle_cmd) {
      const LaurentPoly d = burau_alexander(braid_word(params));
      if (as_json) {
        nlohmann::ordered_json j{{"p", params.p}, {"k", params.k}, {"sign", sign_name(params.sign)},
                                 {"s", params.s}, {"r", params.r}, {"q", params.q}};
        j["delta"] = delta_json(d);
        j["delta_text"] = d.to_string();
        out << j.dump() << '\n';
      } else {
        out << d.to_string() << '\n';
      }
      return 0;
    }

    if (*render_cmd) {
      const GenusOneDiagram d = build_diagram(params, options_for(kf.seed));
      std::string svg;
      if (target == "diagram") {
        svg = render_diagram_svg(d);
      } else {
        const KnotComplex c = build_complex(d, enumerate_bigons(d));
        svg = render_staircase_svg(c);
      }
      return emit(svg_path, svg, out, err);
    }

    const KnotReport rep = compute_report(params, options_for(kf.seed));
    if (*classify_cmd) return emit(out_path, report_json(rep).dump() + "\n", out, err);
    const std::string text = as_json ? hfk_json(rep).dump(2) + "\n" : hfk_text(rep);
    return emit(out_path, text, out, err);
  } catch (const ParamError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ttk::cli
