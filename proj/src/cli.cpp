#include "zrule/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "zrule/kernels.hpp"
#include "zrule/periodicity.hpp"
#include "zrule/primes.hpp"
#include "zrule/render.hpp"
#include "zrule/report_io.hpp"
#include "zrule/solitons.hpp"
#include "zrule/triangle.hpp"
#include "zrule/west_extremes.hpp"
#include "zrule/words.hpp"

namespace zrule::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string gen = "naturals";
  std::vector<std::uint64_t> primes;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint32_t g = 0;
  std::uint32_t g_min = 0;
  std::string terms;
  std::string format = "text";
  std::string out;
  std::size_t zoom = 1;
  std::size_t max_cells = 1u << 20;
  bool unique = false;
  bool listing = false;
  std::string check;
};

std::uint64_t single_prime(const RunConfig& c) {
  if (c.primes.size() != 1) throw UsageError("exactly one --p is required");
  return c.primes.front();
}

std::size_t require(std::size_t v, const char* flag) {
  if (v == 0) throw UsageError(std::string(flag) + " must be given and >= 1");
  return v;
}

InitialGeneration make_gen(const RunConfig& c) {
  if (c.gen == "naturals") return InitialGeneration::naturals();
  if (c.gen == "squarefree") return InitialGeneration::squarefree_kernels();
  if (c.gen == "p-spaced") return InitialGeneration::p_spaced(single_prime(c));
  if (c.gen == "p-section") return InitialGeneration::p_section(single_prime(c));
  if (c.gen == "explicit") {
    std::vector<FactoredNat> v;
    std::stringstream ss(c.terms);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::uint64_t x = 0;
      try {
        std::size_t used = 0;
        x = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw UsageError("--terms: not a positive integer: '" + tok + "'");
      }
      if (x == 0) throw UsageError("--terms: entries must be >= 1");
      v.push_back(factor_u64(x));
    }
    if (v.empty()) throw UsageError("--gen explicit needs --terms");
    return InitialGeneration::explicit_terms(std::move(v));
  }
  throw UsageError("unknown --gen '" + c.gen + "'");
}

void need_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.format == a) return;
  }
  throw UsageError("--format " + c.format + " not supported by this command");
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    io::write_text(c.out, text);
  }
}

void emit_binary(const RunConfig& c, const std::vector<std::uint8_t>& bytes) {
  if (c.out.empty()) throw UsageError("--out is required for binary formats");
  write_bytes(c.out, bytes);
}

std::string join_decimal(const std::vector<FactoredNat>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += decimal_string(v[i]);
  }
  return s + "\n";
}

int cmd_triangle(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "csv", "json"});
  const Triangle t = build_triangle(make_gen(c), require(c.k, "--k"));
  if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(t)));
    return Ok;
  }
  std::string s;
  if (c.format == "csv") s = "row,col,value\n";
  for (std::size_t j = 1; j <= t.size(); ++j) {
    for (std::size_t k = 1; k <= t.rows[j - 1].size(); ++k) {
      if (c.format == "csv") {
        s += std::to_string(j) + "," + std::to_string(k) + "," + decimal_string(t.at(j, k)) + "\n";
      } else {
        s += (k > 1 ? " " : "") + decimal_string(t.at(j, k));
      }
    }
    if (c.format == "text") s += "\n";
  }
  emit(c, out, s);
  return Ok;
}

int cmd_west(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "csv", "json"});
  const std::size_t M = require(c.m, "--m");
  if (c.unique && c.listing) throw UsageError("--unique and --listing are exclusive");
  const WestEdge w = west_edge(make_gen(c), M);
  if (c.listing) {
    const DivisorListing l = divisor_listing(M, w);
    if (c.format == "json") {
      emit(c, out, io::dump(io::to_json(l)));
    } else if (c.format == "csv") {
      emit(c, out, io::to_csv(io::listing_csv(l)));
    } else {
      std::string d, nd;
      for (const auto& e : l.primes) (e.divides ? d : nd) += (" " + std::to_string(e.prime));
      emit(c, out, "omega=" + std::to_string(l.omega) + "\ndivisors:" + d + "\nnon-divisors:" + nd + "\n");
    }
    return Ok;
  }
  if (c.unique) {
    const auto u = unique_ordered(w);
    if (c.format == "json") {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& v : u) a.push_back(decimal_string(v));
      emit(c, out, io::dump(a));
    } else if (c.format == "csv") {
      emit(c, out, io::to_csv(io::factored_list_csv(u)));
    } else {
      emit(c, out, join_decimal(u));
    }
    return Ok;
  }
  if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(w)));
  } else if (c.format == "csv") {
    emit(c, out, io::to_csv(io::west_csv(w)));
  } else {
    emit(c, out, join_decimal(w.terms));
  }
  return Ok;
}

int cmd_tomography(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "json", "pgm", "ppm"});
  const Tomography t = tomography(make_gen(c), single_prime(c), require(c.k, "--k"));
  if (c.format == "pgm") {
    emit_binary(c, pgm_bytes(t));
  } else if (c.format == "ppm") {
    emit_binary(c, ppm_bytes(render_tomography(t, default_palette(), c.zoom)));
  } else if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(t)));
  } else {
    std::string s;
    for (std::size_t j = 1; j <= t.depth(); ++j) {
      const auto r = t.row(j);
      for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
      s += "\n";
    }
    emit(c, out, s);
  }
  return Ok;
}

int cmd_period(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "json"});
  const PeriodReport r = minimal_period(single_prime(c));
  if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(r)));
  } else {
    emit(c, out, "pi=" + std::to_string(r.minimal_period) + " bound=" + std::to_string(r.bound) +
                     " pre=" + std::to_string(r.pre_period_rows) + "\n");
  }
  return Ok;
}

std::string soliton_line(const SolitonReport& s) {
  return "p=" + std::to_string(s.prime) + " g=" + std::to_string(s.power) +
         " cells=" + std::to_string(s.cells.size()) + " rows=" + std::to_string(s.row_min) + ".." +
         std::to_string(s.row_max) + " cols=" + std::to_string(s.col_min) + ".." +
         std::to_string(s.col_max) + " max_exponent=" + std::to_string(s.max_exponent) +
         " touched_boundary=" + (s.touched_boundary ? "true" : "false") + "\n";
}

SolitonOptions soliton_options(const RunConfig& c) {
  SolitonOptions o;
  o.max_window_cells = c.max_cells;
  return o;
}

int cmd_soliton(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "json", "ppm"});
  const std::uint64_t p = single_prime(c);
  if (c.g < 2) throw UsageError("--g must be >= 2");
  const SolitonReport s = extract_soliton(p, c.g, soliton_options(c));
  if (c.format == "ppm") {
    const std::size_t first = s.col_min > s.row_max ? s.col_min - s.row_max : 1;
    const std::size_t width = s.col_max - first + 1;
    const Tomography t = naturals_window(p, first, width, std::min(width, s.row_max + 1));
    emit_binary(c, ppm_bytes(render_soliton(t, s, default_palette(), c.zoom)));
  } else if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(s)));
  } else {
    emit(c, out, soliton_line(s));
  }
  return Ok;
}

int cmd_extremes(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "csv", "json"});
  const std::uint32_t g_min = c.g_min ? c.g_min : 2;
  if (c.g < g_min) throw UsageError("--g must be >= --g-min (default 2)");
  const auto rows = table_west_lag(g_min, c.g);
  if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(rows)));
  } else if (c.format == "csv") {
    emit(c, out, io::to_csv(io::table1_csv(rows)));
  } else {
    std::string s;
    for (const auto& r : rows) {
      s += std::to_string(r.m) + " " + scientific_string(r.value) + " omega=" + std::to_string(r.omega) +
           " " + factor_string(r.value) + "\n";
    }
    emit(c, out, s);
  }
  return Ok;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "csv", "json"});
  const ComparisonStats s = comparison_stats(require(c.k, "--k"));
  if (c.format == "json") {
    emit(c, out, io::dump(io::to_json(s)));
  } else {
    std::string t = io::to_csv(io::table2_csv(s));
    if (c.format == "text") t += "equalities=" + std::to_string(s.equality_count) + "\n";
    emit(c, out, t);
  }
  return Ok;
}

int verdict(const RunConfig& c, std::ostream& out, bool ok, const std::string& text,
            const nlohmann::json& j) {
  if (c.format == "json") {
    nlohmann::json o = j;
    o["ok"] = ok;
    emit(c, out, io::dump(o));
  } else {
    emit(c, out, std::string(ok ? "ok: " : "violation: ") + text + "\n");
  }
  return ok ? Ok : Violation;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  need_format(c, {"text", "json"});
  const std::string& name = c.check;
  if (name == "squarefree-west") {
    const auto r = check_squarefree_west(make_gen(c), require(c.m, "--m"));
    std::string text = "checked " + std::to_string(r.checked) + " west terms";
    if (!r.ok()) text += "; W(" + std::to_string(*r.first_violation) + ") = " + factor_string(*r.violating_value);
    return verdict(c, out, r.ok(), text, io::to_json(r));
  }
  if (name == "solitons") {
    const std::uint64_t p = single_prime(c);
    if (c.g < 2) throw UsageError("--g must be >= 2");
    const DisjointnessReport r =
        c.k ? check_soliton_disjointness(tomography(InitialGeneration::naturals(), p, c.k), c.g)
            : check_soliton_disjointness(p, c.g, soliton_options(c));
    std::string text = "p=" + std::to_string(p) + " g<=" + std::to_string(c.g) + " overlaps=" +
                       std::to_string(r.overlaps.size()) + " touchings=" + std::to_string(r.touchings.size()) +
                       " incomplete=" + std::to_string(r.incomplete.size());
    return verdict(c, out, r.disjoint() && r.incomplete.empty(), text, io::to_json(r));
  }
  if (name == "theorem3") {
    const std::size_t K = c.k ? c.k : 512;
    const Tomography t = tomography(InitialGeneration::naturals(), 2, K);
    std::size_t checked = 0, bad = 0;
    for (std::size_t j = 1; j <= t.depth(); ++j) {
      const auto r = t.row(j);
      for (std::size_t i = 0; i < r.size(); ++i, ++checked) bad += predict_v2(j, i + 1) != r[i];
    }
    return verdict(c, out, bad == 0,
                   "checked " + std::to_string(checked) + " cells, " + std::to_string(bad) + " mismatches",
                   {{"checked", checked}, {"mismatches", bad}});
  }
  if (name == "corollary1") {
    const V2Profile v = v2_west_profile(c.m ? c.m : 1024);
    std::string text = "checked " + std::to_string(v.bits.size()) + " west terms";
    if (v.first_mismatch) text += "; first mismatch at m=" + std::to_string(*v.first_mismatch);
    if (v.any_four) text += "; some term divisible by 4";
    nlohmann::json j{{"checked", v.bits.size()}, {"any_four", v.any_four}};
    if (v.first_mismatch) j["first_mismatch"] = *v.first_mismatch;
    return verdict(c, out, v.ok(), text, j);
  }
  if (name == "conjecture3") {
    const std::uint32_t g = c.g ? c.g : 13;
    const auto r = check_conjecture3(g, (std::size_t{1} << g) + 1);
    std::size_t bad = 0;
    for (const auto& e : r.entries) bad += !e.match;
    return verdict(c, out, r.all_match(),
                   "g<=" + std::to_string(g) + " mismatches=" + std::to_string(bad), io::to_json(r));
  }
  if (name == "periods") {
    std::vector<std::uint64_t> ps = c.primes;
    if (ps.empty()) ps = {3, 5, 7, 11, 13, 17, 19, 31, 127};
    bool ok = true;
    std::string text;
    nlohmann::json a = nlohmann::json::array();
    for (const auto p : ps) {
      const PeriodReport r = minimal_period(p);
      const bool divides = r.bound % r.minimal_period == 0;
      // A shorter west-edge period is reported, not treated as a violation.
      const std::uint64_t wp = west_period(p);
      ok = ok && divides;
      text += (text.empty() ? "" : " ") + std::string("pi_") + std::to_string(p) + "=" +
              std::to_string(r.minimal_period) + (divides ? "" : "(!)") +
              (wp == r.minimal_period ? "" : "(west " + std::to_string(wp) + ")");
      auto j = io::to_json(r);
      j["west_period"] = wp;
      a.push_back(std::move(j));
    }
    return verdict(c, out, ok, text, {{"periods", a}});
  }
  if (name == "theorem5") {
    const std::uint32_t g_min = c.g_min ? c.g_min : 4;
    const std::uint32_t g_max = c.g ? c.g : 10;
    if (g_min < 2 || g_max < g_min) throw UsageError("need 2 <= --g-min <= --g");
    const auto rows = table_west_lag(g_min, g_max);
    std::size_t checked = 0, bad = 0;
    for (const auto& r : rows) {
      if (!r.formula_agrees) continue;
      ++checked;
      bad += !*r.formula_agrees;
    }
    return verdict(c, out, bad == 0,
                   "checked " + std::to_string(checked) + " extremes, " + std::to_string(bad) + " disagree",
                   io::to_json(rows));
  }
  throw UsageError("unknown verify target '" + name + "'");
}

int cmd_render(const RunConfig& c, std::ostream&) {
  need_format(c, {"text", "ppm"});
  const std::uint64_t p = single_prime(c);
  const Tomography t = tomography(make_gen(c), p, require(c.k, "--k"));
  if (c.g >= 2) {
    emit_binary(c, ppm_bytes(render_soliton(t, component_at(t, c.g), default_palette(), c.zoom)));
  } else {
    emit_binary(c, ppm_bytes(render_tomography(t, default_palette(), c.zoom)));
  }
  return Ok;
}

std::string key_of(const std::string& token) {
  const auto eq = token.find('=');
  return token.substr(0, eq);
}

}  // namespace

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto x = s.find_first_not_of(" \t\r");
      const auto y = s.find_last_not_of(" \t\r");
      return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    out.push_back("--" + key + "=" + value);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  int threads = 0;
  std::string config_path;

  CLI::App app{"Z-rule triangle engine"};
  app.name(args.empty() ? "zrule" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", threads, "worker threads (0 = OpenMP default)")
      ->envname("ZRULE_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--config", config_path, "flat key=value file with default flag values");

  auto add_gen = [&](CLI::App* s) {
    s->add_option("--gen", c.gen, "naturals | squarefree | p-spaced | p-section | explicit")
        ->check(CLI::IsMember({"naturals", "squarefree", "p-spaced", "p-section", "explicit"}));
    s->add_option("--terms", c.terms, "comma-separated first row for --gen explicit");
  };
  auto add_p = [&](CLI::App* s) { s->add_option("--p", c.primes, "prime")->delimiter(','); };
  auto add_io = [&](CLI::App* s) {
    s->add_option("--format", c.format, "text | csv | json | pgm | ppm")
        ->check(CLI::IsMember({"text", "csv", "json", "pgm", "ppm"}));
    s->add_option("--out", c.out, "output path (default stdout for text formats)");
  };

  auto* triangle = app.add_subcommand("triangle", "full triangle T_S(K)");
  add_gen(triangle);
  add_p(triangle);
  triangle->add_option("--k", c.k, "rows");
  add_io(triangle);

  auto* west = app.add_subcommand("west", "west edge W_S(1..M)");
  add_gen(west);
  add_p(west);
  west->add_option("--m", c.m, "number of terms");
  west->add_flag("--unique", c.unique, "sorted distinct values");
  west->add_flag("--listing", c.listing, "primes <= m split by whether they divide W(m)");
  add_io(west);

  auto* tomo = app.add_subcommand("tomography", "p-exponent triangle");
  add_gen(tomo);
  add_p(tomo);
  tomo->add_option("--k", c.k, "rows");
  tomo->add_option("--zoom", c.zoom, "pixels per cell")->check(CLI::PositiveNumber);
  add_io(tomo);

  auto* period = app.add_subcommand("period", "row period of v_p(T_P)");
  add_p(period);
  add_io(period);

  auto* soliton = app.add_subcommand("soliton", "Z-soliton sprouting from p^g");
  add_p(soliton);
  soliton->add_option("--g", c.g, "power");
  soliton->add_option("--max-cells", c.max_cells, "window cell cap")->check(CLI::PositiveNumber);
  soliton->add_option("--zoom", c.zoom, "pixels per cell")->check(CLI::PositiveNumber);
  add_io(soliton);

  auto* extremes = app.add_subcommand("extremes", "W_P around powers of two");
  extremes->add_option("--g", c.g, "largest g");
  extremes->add_option("--g-min", c.g_min, "smallest g (default 2)");
  add_io(extremes);

  auto* compare = app.add_subcommand("compare", "W_N* versus W_P surplus histogram");
  compare->add_option("--k", c.k, "number of indices");
  add_io(compare);

  auto* verify = app.add_subcommand("verify", "run a checker; exit 1 on violation");
  verify->add_option("name", c.check, "squarefree-west | solitons | theorem3 | corollary1 | conjecture3 | periods | theorem5")
      ->required()
      ->check(CLI::IsMember({"squarefree-west", "solitons", "theorem3", "corollary1", "conjecture3", "periods",
                             "theorem5"}));
  add_gen(verify);
  add_p(verify);
  verify->add_option("--m", c.m, "west terms");
  verify->add_option("--k", c.k, "rows");
  verify->add_option("--g", c.g, "largest power");
  verify->add_option("--g-min", c.g_min, "smallest power");
  verify->add_option("--max-cells", c.max_cells, "soliton window cell cap")->check(CLI::PositiveNumber);
  add_io(verify);

  auto* render = app.add_subcommand("render", "PPM image of a tomography or soliton");
  add_gen(render);
  add_p(render);
  render->add_option("--k", c.k, "rows");
  render->add_option("--g", c.g, "highlight the soliton from p^g");
  render->add_option("--zoom", c.zoom, "pixels per cell")->check(CLI::PositiveNumber);
  add_io(render);

  // Config keys become trailing --key=value tokens unless the flag was
  // given on the command line; keys the chosen subcommand lacks are skipped.
  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  try {
    for (std::size_t i = 0; i < argv.size(); ++i) {
      if (argv[i] == "--config" && i + 1 < argv.size()) config_path = argv[i + 1];
      if (argv[i].rfind("--config=", 0) == 0) config_path = argv[i].substr(9);
    }
    if (!config_path.empty()) {
      CLI::App* sub = nullptr;
      for (const auto& a : argv) {
        if (auto* s = app.get_subcommand_no_throw(a); s && a.rfind("--", 0) != 0) {
          sub = s;
          break;
        }
      }
      for (const auto& tok : config_tokens(config_path)) {
        const std::string key = key_of(tok);
        const bool given = std::any_of(argv.begin(), argv.end(), [&](const std::string& a) {
          return a == key || a.rfind(key + "=", 0) == 0;
        });
        if (given) continue;
        const bool known = app.get_option_no_throw(key) || (sub && sub->get_option_no_throw(key));
        if (known) argv.push_back(tok);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return Usage;
  }

  kernels::set_thread_count(threads);
  try {
    for (const auto p : c.primes) {
      if (!is_prime_u64(p)) throw UsageError("--p " + std::to_string(p) + " is not prime");
    }
    if (c.zoom == 0) throw UsageError("--zoom must be >= 1");
    if (triangle->parsed()) return cmd_triangle(c, out);
    if (west->parsed()) return cmd_west(c, out);
    if (tomo->parsed()) return cmd_tomography(c, out);
    if (period->parsed()) return cmd_period(c, out);
    if (soliton->parsed()) return cmd_soliton(c, out);
    if (extremes->parsed()) return cmd_extremes(c, out);
    if (compare->parsed()) return cmd_compare(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (render->parsed()) return cmd_render(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const SolitonBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

}  // namespace zrule::cli
