// ehrmagic: command-line front end for magic-basis analysis of Ehrhart
// polynomials.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain error.

#include <ehrmagic/ehrmagic.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"

namespace {

using namespace ehrmagic;
using cli::Json;
using cli::OutputRecord;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

/// Thrown for malformed option values that CLI11 itself accepts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyOptions {
  std::string family;
  std::string poly;
  std::optional<unsigned> d;
  std::string q;
  std::optional<unsigned> rank;
  std::optional<unsigned> n;
};

struct Range {
  unsigned lo;
  unsigned hi;
};

Range parse_range(const std::string& text) {
  auto to_uint = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad range '" + text + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned v = to_uint(text);
    return {v, v};
  }
  Range r{to_uint(text.substr(0, dots)), to_uint(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad integer list '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void add_family_options(CLI::App* cmd, FamilyOptions& o, bool k_is_rank) {
  cmd->add_option("--family", o.family,
                  "simplex | spiked | minimal-matroid | multipartite | hypersimplex | cross | reflexive-simplex");
  cmd->add_option("--poly", o.poly, "polynomial expression in x, e.g. \"binom(x+2,2)\"");
  cmd->add_option("--d", o.d, "dimension parameter");
  cmd->add_option("--q", o.q, "q for spiked; comma-separated part sizes for multipartite");
  if (k_is_rank)
    cmd->add_option("--k,--rank", o.rank, "rank parameter (minimal-matroid, hypersimplex)");
  else
    cmd->add_option("--rank", o.rank, "rank parameter (minimal-matroid, hypersimplex)");
  cmd->add_option("--n", o.n, "ground-set size (minimal-matroid, hypersimplex)");
}

unsigned require(const std::optional<unsigned>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing --") + name);
  return *v;
}

FamilySpec build_spec(const FamilyOptions& o) {
  if (!o.poly.empty() && !o.family.empty()) throw UsageError("give either --poly or --family, not both");
  if (!o.poly.empty()) return Generic{parse_polynomial(o.poly)};
  const std::string& f = o.family;
  if (f.empty()) throw UsageError("missing --family or --poly");
  if (f == "simplex") return StandardSimplex{require(o.d, "d")};
  if (f == "cross") return CrossPolytope{require(o.d, "d")};
  if (f == "reflexive-simplex") return StandardReflexiveSimplex{require(o.d, "d")};
  if (f == "spiked") {
    auto q = parse_uint_list(o.q.empty() ? "" : o.q);
    if (q.size() != 1) throw UsageError("spiked needs a single --q");
    return SpikedSimplex{q[0], require(o.d, "d")};
  }
  if (f == "minimal-matroid") return MinimalMatroid{require(o.rank, "k"), require(o.n, "n")};
  if (f == "hypersimplex") return Hypersimplex{require(o.rank, "k"), require(o.n, "n")};
  if (f == "multipartite") return CompleteMultipartite{parse_uint_list(o.q)};
  throw UsageError("unknown family '" + f + "'");
}

Json spec_inputs(const FamilySpec& spec) {
  Json j;
  j["spec"] = describe(spec);
  if (const auto* g = std::get_if<Generic>(&spec)) j["polynomial"] = to_string(g->poly);
  return j;
}

std::uint64_t scan_cap_from_env() {
  const char* env = std::getenv("EHRHART_SCAN_CAP");
  if (env == nullptr || *env == '\0') return default_scan_cap;
  std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
    throw UsageError("EHRHART_SCAN_CAP must be a positive integer");
  std::uint64_t v = std::stoull(s);
  if (v == 0) throw UsageError("EHRHART_SCAN_CAP must be a positive integer");
  return v;
}

Json interval_json(const sturm::RootInterval& iv) {
  return Json{{"lo", cli::rational_json(iv.lo)}, {"hi", cli::rational_json(iv.hi)}};
}

// ---- subcommands -----------------------------------------------------------

OutputRecord cmd_expand(const FamilyOptions& o, const std::string& k_text) {
  FamilySpec spec = build_spec(o);
  Rational k = parse_rational(k_text);
  Polynomial f = ehrhart(spec);
  MagicExpansion e = to_magic(f, k);
  OutputRecord rec;
  rec.command = "expand";
  rec.inputs = spec_inputs(spec);
  rec.inputs["k"] = cli::rational_json(k);
  rec.result["d"] = e.d;
  rec.result["coeffs"] = cli::rationals_json(e.coeffs);
  rec.result["positive"] = e.is_nonnegative();
  Json neg = Json::array();
  for (std::size_t i = 0; i < e.coeffs.size(); ++i)
    if (e.coeffs[i] < 0) neg.push_back(i);
  rec.result["negative_indices"] = neg;
  rec.result["dilated"] = to_string(scale_arg(f, k));
  return rec;
}

OutputRecord cmd_mindex(const FamilyOptions& o, int& exit_code) {
  FamilySpec spec = build_spec(o);
  std::uint64_t cap = scan_cap_from_env();
  MIndexResult r = m_index(ehrhart(spec), cap);
  OutputRecord rec;
  rec.command = "mindex";
  rec.inputs = spec_inputs(spec);
  rec.result["m_index"] = r.value ? Json(cli::integer_json(*r.value)) : Json("NOT_FOUND");
  rec.result["search_bound"] = cli::integer_json(r.search_bound_used);
  rec.result["monotone_search"] = r.monotone_search;
  if (!r.monotone_search)
    rec.warnings.push_back("coefficients not all positive: linear scan without a monotonicity guarantee");
  if (!r.value) {
    rec.warnings.push_back("no magic-positive dilation found up to the scan cap " + std::to_string(cap) +
                           " (EHRHART_SCAN_CAP)");
    exit_code = kExitDomain;
  }
  return rec;
}

OutputRecord cmd_table(const FamilyOptions& o, const std::string& d_range, const std::string& n_range,
                       const std::string& types) {
  OutputRecord rec;
  rec.command = "table";
  rec.inputs["family"] = o.family;
  std::vector<std::pair<std::string, FamilySpec>> specs;
  std::string param = "d";
  const std::string& f = o.family;
  if (f == "multipartite") {
    param = "q";
    std::string t = types.empty() ? "1,1,1;2,2,2;3,3,3;1,2,3;1,2,4;1,2,5;1,2,3,4;1,1,1,5" : types;
    rec.inputs["types"] = t;
    std::size_t start = 0;
    while (start <= t.size()) {
      auto semi = t.find(';', start);
      std::string item = t.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      FamilySpec s = CompleteMultipartite{parse_uint_list(item)};
      specs.emplace_back("(" + item + ")", s);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  } else if (f == "minimal-matroid" || f == "hypersimplex") {
    param = "n";
    Range r = parse_range(n_range.empty() ? throw UsageError("missing --n range") : n_range);
    unsigned k = require(o.rank, "k");
    rec.inputs["k"] = k;
    rec.inputs["n"] = n_range;
    for (unsigned n = r.lo; n <= r.hi; ++n) {
      FamilySpec s = f == "hypersimplex" ? FamilySpec(Hypersimplex{k, n}) : FamilySpec(MinimalMatroid{k, n});
      specs.emplace_back(std::to_string(n), s);
    }
  } else {
    Range r = parse_range(d_range.empty() ? throw UsageError("missing --d range") : d_range);
    rec.inputs["d"] = d_range;
    for (unsigned d = r.lo; d <= r.hi; ++d) {
      FamilyOptions one = o;
      one.d = d;
      specs.emplace_back(std::to_string(d), build_spec(one));
    }
  }

  std::uint64_t cap = scan_cap_from_env();
  cli::Table table{{param, "m-index"}, {}, true};
  Json rows = Json::array();
  for (const auto& [label, spec] : specs) {
    MIndexResult r = m_index(ehrhart(spec), cap);
    std::string value = r.value ? to_string(*r.value) : "NOT_FOUND";
    table.rows.push_back({label, value});
    rows.push_back(Json{{param, label}, {"m_index", value}, {"monotone_search", r.monotone_search}});
  }
  rec.result["rows"] = rows;
  rec.table = table;
  return rec;
}

OutputRecord cmd_hstar(const FamilyOptions& o) {
  FamilySpec spec = build_spec(o);
  Polynomial f = ehrhart(spec);
  HStarVector h = hstar_from_ehrhart(f);
  OutputRecord rec;
  rec.command = "hstar";
  rec.inputs = spec_inputs(spec);
  rec.result["d"] = h.d;
  rec.result["hstar"] = cli::rationals_json(h.h);
  rec.result["palindromic"] = is_palindromic(h);
  rec.result["magic_palindromic"] = reflexive_magic_check(f);
  rec.warnings = h.warnings();
  return rec;
}

OutputRecord cmd_realrooted(const FamilyOptions& o, bool numerator) {
  FamilySpec spec = build_spec(o);
  Polynomial f = ehrhart(spec);
  OutputRecord rec;
  rec.command = "realrooted";
  rec.inputs = spec_inputs(spec);
  rec.inputs["target"] = numerator ? "h*-polynomial" : "polynomial";
  Polynomial target = numerator ? hstar_from_ehrhart(f).as_polynomial() : f;
  rec.result["polynomial"] = to_string(target, numerator ? 't' : 'x');
  rec.result["degree"] = *target.degree();
  rec.result["distinct_real_roots"] = sturm::count_real_roots(target);
  rec.result["real_rooted"] = is_real_rooted(target);
  return rec;
}

OutputRecord cmd_cl(const FamilyOptions& o) {
  FamilySpec spec = build_spec(o);
  Polynomial f = ehrhart(spec);
  CLCertificate c = cl_check(f);
  OutputRecord rec;
  rec.command = "cl";
  rec.inputs = spec_inputs(spec);
  rec.result["is_cl"] = c.is_cl;
  rec.result["odd_degree_half_root"] = c.odd_degree_half_root;
  Json parts = Json::array();
  for (const auto& iv : c.squared_parts) parts.push_back(interval_json(iv));
  rec.result["squared_parts"] = parts;
  rec.result["max_b_squared_upper"] = cli::rational_json(c.max_b_squared_upper);
  if (c.is_cl) {
    rec.result["mindex_bound"] = cli::integer_json(cl_mindex_bound(f));
    std::size_t d = *f.degree();
    if (d >= 1) rec.result["dimension_only_bound"] = cli::integer_json(dimension_only_bound(d));
  }
  return rec;
}

OutputRecord cmd_verify(const FamilyOptions& o, bool sweep, const std::string& dilations,
                        const std::string& points, int& exit_code) {
  OutputRecord rec;
  rec.command = "verify";
  std::vector<FamilySpec> specs;
  if (sweep) {
    specs = oracle_sweep();
    rec.inputs["sweep"] = true;
  } else {
    specs.push_back(build_spec(o));
    rec.inputs = spec_inputs(specs.front());
  }
  Range dr = parse_range(dilations);
  Range pr = parse_range(points);
  rec.inputs["dilation"] = dilations;
  rec.inputs["points"] = points;
  if (dr.lo == 0 || pr.lo == 0) throw UsageError("dilation and points must be positive");

  cli::Table table{{"spec", "dilation", "n", "formula", "count", "status"}, {}, false};
  Json rows = Json::array();
  std::size_t failures = 0;
  for (const auto& spec : specs) {
    Polynomial f = ehrhart(spec);
    for (unsigned m = dr.lo; m <= dr.hi; ++m) {
      for (unsigned n = pr.lo; n <= pr.hi; ++n) {
        Rational formula = eval(f, Rational(static_cast<unsigned long>(m) * n));
        Integer count = lattice_count(spec, m, n).count;
        bool ok = formula == Rational(count);
        if (!ok) ++failures;
        std::string status = ok ? "PASS" : "FAIL";
        table.rows.push_back({describe(spec), std::to_string(m), std::to_string(n), to_string(formula),
                              to_string(count), status});
        rows.push_back(Json{{"spec", describe(spec)},
                            {"dilation", m},
                            {"n", n},
                            {"formula", cli::rational_json(formula)},
                            {"count", cli::integer_json(count)},
                            {"status", status}});
      }
    }
  }
  rec.result["rows"] = rows;
  rec.result["failures"] = failures;
  rec.table = table;
  if (failures != 0) exit_code = kExitVerifyFailed;
  return rec;
}

OutputRecord cmd_conjecture(const std::string& question, const std::string& range_text,
                            const std::string& types) {
  OutputRecord rec;
  rec.command = "conjecture";
  rec.inputs["question"] = question;
  std::uint64_t cap = scan_cap_from_env();
  ConjectureReport report{Question::Multipartite, {}};
  if (question == "multipartite" && !types.empty()) {
    rec.inputs["types"] = types;
    std::size_t start = 0;
    while (start <= types.size()) {
      auto semi = types.find(';', start);
      report.rows.push_back(scan_multipartite(
          parse_uint_list(types.substr(start, semi == std::string::npos ? std::string::npos : semi - start)), cap));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  } else {
    Question q;
    if (question == "minimal-matroid")
      q = Question::MinimalMatroid;
    else if (question == "multipartite")
      q = Question::Multipartite;
    else if (question == "hypersimplex")
      q = Question::Hypersimplex;
    else
      throw UsageError("unknown question '" + question + "'");
    if (range_text.empty()) throw UsageError("missing --range");
    rec.inputs["range"] = range_text;
    Range r = parse_range(range_text);
    report = conjecture_scan(q, {r.lo, r.hi}, cap);
  }

  cli::Table table{{"spec", "computed", "conjectured", "status", "note"}, {}, false};
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    std::string conj;
    Json conj_json = Json::array();
    for (std::size_t i = 0; i < row.conjectured.size(); ++i) {
      conj += (i ? " " : "") + to_string(row.conjectured[i]);
      conj_json.push_back(cli::integer_json(row.conjectured[i]));
    }
    std::string status = !row.computed ? "skipped" : (row.match ? "match" : "mismatch");
    std::string computed = row.computed ? to_string(*row.computed) : "-";
    table.rows.push_back({describe(row.spec), computed, "{" + conj + "}", status, row.note});
    rows.push_back(Json{{"spec", describe(row.spec)},
                        {"computed", computed},
                        {"conjectured", conj_json},
                        {"status", status},
                        {"note", row.note}});
  }
  rec.result["rows"] = rows;
  rec.result["mismatches"] = report.mismatches();
  rec.table = table;
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magic-basis analysis of Ehrhart polynomials"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string format = "markdown";
  std::string out_path;
  bool approx = false;
  app.add_option("--format", format, "markdown | json | csv")
      ->check(CLI::IsMember({"markdown", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to FILE instead of stdout");
  app.add_flag("--approx", approx, "also print approximate decimals next to exact rationals");

  FamilyOptions expand_o, mindex_o, table_o, hstar_o, rr_o, cl_o, verify_o;
  std::string k_text = "1";
  std::string d_range, n_range, types, table_types;
  std::string dilations = "1", points = "1..3";
  std::string question, conj_range, conj_types;
  bool sweep = false, numerator = false;

  auto* expand = app.add_subcommand("expand", "magic-basis coefficients of f(kx)");
  add_family_options(expand, expand_o, false);
  expand->add_option("--k", k_text, "dilation factor (rational)")->capture_default_str();

  auto* mindex = app.add_subcommand("mindex", "smallest integer dilation that is magic positive");
  add_family_options(mindex, mindex_o, true);

  auto* table = app.add_subcommand("table", "m-index table over a parameter range");
  add_family_options(table, table_o, true);
  table->add_option("--types", table_types, "multipartite types, e.g. \"1,1,1;1,2,3\"");

  auto* hstar = app.add_subcommand("hstar", "h*-vector and palindromicity");
  add_family_options(hstar, hstar_o, true);

  auto* rr = app.add_subcommand("realrooted", "exact real-rootedness via Sturm sequences");
  add_family_options(rr, rr_o, true);
  rr->add_flag("--numerator", numerator, "test the h*-polynomial instead of the polynomial itself");

  auto* cl = app.add_subcommand("cl", "roots on Re(z) = -1/2 and the resulting m-index bounds");
  add_family_options(cl, cl_o, true);

  auto* verify = app.add_subcommand("verify", "closed form versus lattice-point enumeration");
  add_family_options(verify, verify_o, true);
  verify->add_flag("--sweep", sweep, "run the built-in family sweep");
  verify->add_option("--dilation", dilations, "dilation or range a..b")->capture_default_str();
  verify->add_option("--points", points, "n or range a..b")->capture_default_str();

  auto* conj = app.add_subcommand("conjecture", "scan the open m-index questions (reports only)");
  conj->add_option("--question", question, "minimal-matroid | multipartite | hypersimplex")
      ->required()
      ->check(CLI::IsMember({"minimal-matroid", "multipartite", "hypersimplex"}));
  conj->add_option("--range", conj_range, "n range, or total vertex count range for multipartite");
  conj->add_option("--types", conj_types, "explicit multipartite types, e.g. \"1,2,3;2,2,2\"");

  // table's --d/--n take ranges; drop the single-valued family versions.
  table->remove_option(table->get_option("--d"));
  table->remove_option(table->get_option("--n"));
  table->add_option("--d", d_range, "inclusive range a..b");
  table->add_option("--n", n_range, "inclusive range a..b for minimal-matroid / hypersimplex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cli::approx_mode = approx;
  cli::Format fmt = format == "json" ? cli::Format::Json : format == "csv" ? cli::Format::Csv : cli::Format::Markdown;
  int exit_code = 0;
  OutputRecord rec;
  try {
    if (*expand) rec = cmd_expand(expand_o, k_text);
    else if (*mindex) rec = cmd_mindex(mindex_o, exit_code);
    else if (*table) rec = cmd_table(table_o, d_range, n_range, table_types);
    else if (*hstar) rec = cmd_hstar(hstar_o);
    else if (*rr) rec = cmd_realrooted(rr_o, numerator);
    else if (*cl) rec = cmd_cl(cl_o);
    else if (*verify) rec = cmd_verify(verify_o, sweep, dilations, points, exit_code);
    else rec = cmd_conjecture(question, conj_range, conj_types);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  std::string text = cli::render(rec, fmt);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << text;
  }
  return exit_code;
}
