#include "flipcalc/cli.hpp"

#include "flipcalc/builtins.hpp"
#include "flipcalc/dsl.hpp"
#include "flipcalc/fano.hpp"
#include "flipcalc/golden.hpp"
#include "flipcalc/hodge.hpp"
#include "flipcalc/script.hpp"
#include "flipcalc/sod.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace flipcalc::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool color;

  std::string mark(bool pass) const {
    if (!color) return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hodge::HodgeDiamond load_diamond(const std::string& file, const std::string& builtin) {
  if (!file.empty() && !builtin.empty()) throw UsageError("give --diamond or --builtin, not both");
  if (!builtin.empty()) return builtins::diamond(builtin);
  if (file.empty()) throw UsageError("one of --diamond FILE or --builtin NAME is required");
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw UsageError(file + ": " + e.what());
  }
  return hodge::from_json(j).validated();
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + to_string(x);
  return out;
}

std::string cell(const fano::ComponentDimension& c) {
  return c.empty ? "-" : to_string(c.value);
}

// ---- hodge ----

struct HodgeArgs {
  std::string diamond;
  std::string builtin;
  bool column = false;
  bool json_out = false;
  std::optional<std::string> expect;
};

void add_source(CLI::App* cmd, HodgeArgs& a) {
  cmd->add_option("--diamond", a.diamond, "JSON diamond file");
  cmd->add_option("--builtin", a.builtin, "embedded diamond name");
}

int emit_diamond(const Ctx& ctx, const hodge::HodgeDiamond& d, const HodgeArgs& a) {
  std::string text;
  if (a.json_out) text = hodge::to_json(d).dump() + "\n";
  else if (a.column) text = join(d.diagonal()) + "\n";
  else text = hodge::render(d);
  ctx.out << text;
  if (a.expect && join(d.diagonal()) != *a.expect) {
    ctx.err << "expected column " << *a.expect << "\n";
    return kCheckFailed;
  }
  return kPass;
}

// ---- fano ----

struct FanoArgs {
  std::string family = "cubic";
  long n = 0;
  std::optional<long> k;
  bool grid = false;
  bool json_out = false;
  long d = 0;
  long m_lo = -5;
  long m_hi = 5;
  int degree = 0;
};

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

int fano_dims(const Ctx& ctx, const FanoArgs& a) {
  const auto family = fano::parse_family(a.family);
  if (family == fano::Family::Gr25Section && !a.k) {
    std::string row;
    for (const auto& c : fano::gr25_column(a.n)) row += (row.empty() ? "" : " ") + cell(c);
    ctx.out << row << "\n";
    return kPass;
  }
  if (a.k) {
    for (const auto& c : fano::expected_dim_fano(family, a.n, *a.k)) {
      ctx.out << c.label << " " << to_string(c.value) << (c.empty ? " empty" : "") << "\n";
    }
    return kPass;
  }
  for (long j = 0;; ++j) {
    const auto comps = fano::expected_dim_fano(family, a.n, j);
    ctx.out << comps.front().label << " " << to_string(comps.front().value)
            << (comps.front().empty ? " empty" : "") << "\n";
    if (comps.front().empty) break;
  }
  return kPass;
}

int fano_codim(const Ctx& ctx, const FanoArgs& a) {
  const auto family = fano::parse_family(a.family);
  std::vector<fano::CodimReport> reports;
  if (a.grid) reports = fano::verify_codim_grid(family);
  else reports.push_back(fano::verify_codim_identity(family, a.n, need(a.k, "--k")));
  std::vector<fano::SymbolicCheck> symbolic;
  if (a.grid) symbolic = fano::verify_codim_symbolic(family);
  bool pass = true;
  long checks = 0;
  for (const auto& r : reports) {
    pass = pass && r.pass();
    checks += static_cast<long>(r.checks.size());
  }
  for (const auto& s : symbolic) pass = pass && s.pass;
  if (a.json_out) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(fano::to_json(r));
    json sym = json::array();
    for (const auto& s : symbolic) {
      sym.push_back({{"name", s.name}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"pass", s.pass}});
    }
    ctx.out << json{{"reports", arr}, {"symbolic", sym}, {"pass", pass}}.dump(2) << "\n";
    return pass ? kPass : kCheckFailed;
  }
  for (const auto& r : reports) {
    ctx.out << ctx.mark(r.pass()) << " " << fano::to_string(family) << " n=" << r.n
            << " k=" << r.k << " " << fano::to_string(r.regime) << "\n";
    if (!a.grid) {
      for (const auto& c : r.checks) {
        ctx.out << "  " << ctx.mark(c.pass()) << " " << c.name << ": " << to_string(c.lhs)
                << " = " << to_string(c.rhs) << "\n";
      }
    }
  }
  for (const auto& s : symbolic) {
    ctx.out << ctx.mark(s.pass) << " symbolic " << s.name << ": " << s.lhs << " = " << s.rhs
            << "\n";
  }
  ctx.out << (pass ? "all " : "some ") << checks << " identities "
          << (pass ? "hold" : "fail") << "\n";
  return pass ? kPass : kCheckFailed;
}

int fano_splittings(const Ctx& ctx, const FanoArgs& a) {
  bool pass = true;
  for (const auto& row : fano::hilb2_normal_restriction(a.n)) {
    ctx.out << fano::to_string(row.line_type) << "  ->  " << fano::to_string(row.restricted)
            << " " << ctx.mark(row.matches) << "\n";
    pass = pass && row.matches;
  }
  return pass ? kPass : kCheckFailed;
}

int fano_sodcounts(const Ctx& ctx, const FanoArgs& a) {
  const auto family = fano::parse_family(a.family);
  const long k = need(a.k, "--k");
  const auto l = fano::sod_counts(family, a.n, k);
  if (a.json_out) {
    ctx.out << sod::to_json(l).dump() << "\n";
    return kPass;
  }
  ctx.out << dsl::print_canonical(l) << "\n";
  if (family == fano::Family::Cubic && l.count("D_PQ") > 0) {
    ctx.out << "alternative " << dsl::print_canonical(fano::cubic_alternative_sod(a.n, k)) << "\n";
  }
  return kPass;
}

int fano_shape(const Ctx& ctx, const FanoArgs& a) {
  const auto s = fano::flip_shape(fano::parse_family(a.family), a.n, need(a.k, "--k"));
  ctx.out << "r=" << s.r << " s=" << s.s << " base " << s.base_label << "\n";
  for (const auto& c : s.components) ctx.out << "  " << c.base_label << " s=" << c.s << "\n";
  return kPass;
}

int fano_taut(const Ctx& ctx, const FanoArgs& a) {
  const auto rep = fano::verify_taut_splitting(a.d, a.m_lo, a.m_hi);
  ctx.out << "O(" << a.d << ")^[2] = " << fano::to_string(rep.claimed) << "\n";
  for (const auto& row : rep.rows) {
    ctx.out << "  m=" << row.m << " h^" << row.degree << ": " << to_string(row.kunneth) << " vs "
            << to_string(row.split) << "\n";
  }
  ctx.out << ctx.mark(rep.pass) << (rep.h1_vanishes ? " H^1 vanishes" : " H^1 nonzero") << "\n";
  return rep.pass ? kPass : kCheckFailed;
}

// ---- sod ----

int sod_check(const Ctx& ctx, const std::string& path) {
  const auto result = script::run(read_file(path), script::kind_for_path(path));
  ctx.out << script::render(result);
  return result.pass() ? kPass : kCheckFailed;
}

int sod_consistency(const Ctx& ctx, long n_max) {
  bool pass = true;
  for (const auto& row : sod::conjecture_consistency(n_max)) {
    if (!row.in_range) {
      ctx.out << "SKIP n=" << row.n << " (outside the range of the counts)\n";
      continue;
    }
    ctx.out << ctx.mark(row.holds) << " n=" << row.n << " " << dsl::print_canonical(row.hilb2)
            << " = " << dsl::print_canonical(row.fano) << " + "
            << dsl::print_canonical(row.pencil) << "\n";
    pass = pass && row.holds;
  }
  return pass ? kPass : kCheckFailed;
}

int sod_obstruction(const Ctx& ctx, const std::string& builtin, std::string candidate,
                    const std::optional<std::string>& expect) {
  if (candidate.empty()) {
    if (builtin == "quartic-double-solid") candidate = "f1-quartic-double-solid";
    else throw UsageError("--candidate is required for " + builtin);
  }
  const auto x = builtins::diamond(builtin);
  const auto ob =
      sod::embedding_obstruction(hodge::hh0(builtins::diamond(candidate)), hodge::hilbert_square(x));
  const std::string verdict = sod::to_string(ob.verdict);
  ctx.out << verdict << " (hh0 " << to_string(ob.candidate_hh0)
          << (ob.verdict == sod::Verdict::Obstructed ? " > " : " <= ")
          << to_string(ob.ambient_hh0) << ")\n";
  if (expect && *expect != verdict) return kCheckFailed;
  return kPass;
}

// ---- verify-all ----

int verify_all(const Ctx& ctx, bool json_out, const std::vector<std::string>& overrides) {
  golden::Catalog catalog;
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw UsageError("--override expects NAME=FILE");
    const std::string name = o.substr(0, eq);
    (void)builtins::source(name);  // must name a real builtin
    json j;
    try {
      j = json::parse(read_file(o.substr(eq + 1)));
    } catch (const json::exception& e) {
      throw UsageError(o.substr(eq + 1) + ": " + e.what());
    }
    catalog.overrides[name] = hodge::from_json(j);
  }
  const auto reports = golden::run_golden_suite(catalog);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (json_out) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(golden::to_json(r));
    ctx.out << arr.dump(2) << "\n";
    return pass ? kPass : kCheckFailed;
  }
  long failed = 0;
  for (const auto& r : reports) {
    ctx.out << ctx.mark(r.pass) << " [c" << r.criterion << "] " << r.name;
    if (!r.inputs.empty()) ctx.out << " (" << r.inputs << ")";
    ctx.out << "\n";
    if (!r.pass) {
      ++failed;
      ctx.out << "     expected " << r.expected << "\n     computed " << r.computed << "\n";
    }
  }
  ctx.out << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size()
          << " checks passed\n";
  return pass ? kPass : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool color) {
  const Ctx ctx{out, err, color};
  CLI::App app{"Exact checks for Hilbert squares, flips and decomposition counts", "flipcalc"};
  app.require_subcommand(1);

  // hodge
  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge diamond arithmetic");
  hodge_cmd->require_subcommand(1);
  HodgeArgs ha;
  auto* h_hilb2 = hodge_cmd->add_subcommand("hilb2", "Hodge diamond of X^[2]");
  auto* h_sym2 = hodge_cmd->add_subcommand("sym2", "graded symmetric square");
  auto* h_hh0 = hodge_cmd->add_subcommand("hh0", "sum of the (p,p) entries");
  auto* h_show = hodge_cmd->add_subcommand("show", "print a diamond");
  for (auto* c : {h_hilb2, h_sym2, h_show}) {
    add_source(c, ha);
    c->add_flag("--column", ha.column, "print only the (p,p) entries");
    c->add_flag("--json", ha.json_out, "JSON output");
    c->add_option("--expect", ha.expect, "expected column; exit 1 on mismatch");
  }
  add_source(h_hh0, ha);
  std::optional<std::string> hh0_expect;
  h_hh0->add_option("--expect", hh0_expect, "expected value; exit 1 on mismatch");

  // fano
  auto* fano_cmd = app.add_subcommand("fano", "Fano schemes of del Pezzo varieties");
  fano_cmd->require_subcommand(1);
  FanoArgs fa;
  auto add_fnk = [&](CLI::App* c, bool with_k) {
    c->add_option("--family", fa.family, "cubic, two-quadrics or gr25");
    c->add_option("--n", fa.n, "dimension of X")->check(CLI::PositiveNumber);
    if (with_k) c->add_option("--k", fa.k, "plane dimension")->check(CLI::NonNegativeNumber);
  };
  auto* f_dims = fano_cmd->add_subcommand("dims", "expected dimensions of F_k(X)");
  add_fnk(f_dims, true);
  f_dims->get_option("--n")->required();
  auto* f_codim = fano_cmd->add_subcommand("codim", "codimension identities");
  add_fnk(f_codim, true);
  f_codim->add_flag("--grid", fa.grid, "the whole grid");
  f_codim->add_flag("--json", fa.json_out, "JSON output");
  auto* f_split = fano_cmd->add_subcommand("splittings", "normal bundles of lines");
  f_split->add_option("--n", fa.n, "dimension of X")->required()->check(CLI::Range(2L, 100000L));
  auto* f_sod = fano_cmd->add_subcommand("sodcounts", "decomposition of D(G_k(X))");
  add_fnk(f_sod, true);
  f_sod->get_option("--n")->required();
  f_sod->add_flag("--json", fa.json_out, "JSON output");
  auto* f_regime = fano_cmd->add_subcommand("regime", "emptiness regime of (n, k)");
  add_fnk(f_regime, true);
  f_regime->get_option("--n")->required();
  auto* f_shape = fano_cmd->add_subcommand("shape", "flip shape (r, s)");
  add_fnk(f_shape, true);
  f_shape->get_option("--n")->required();
  auto* f_taut = fano_cmd->add_subcommand("taut", "O(d)^[2] on P^2 by cohomology");
  f_taut->add_option("--d", fa.d, "d in {-1, 0, 1}")->required()->check(CLI::Range(-1L, 1L));
  f_taut->add_option("--m-lo", fa.m_lo, "lowest twist");
  f_taut->add_option("--m-hi", fa.m_hi, "highest twist");
  auto* f_classify = fano_cmd->add_subcommand("classify", "del Pezzo varieties by degree");
  f_classify->add_option("--degree", fa.degree, "degree in [1, 9]")->required();

  // sod
  auto* sod_cmd = app.add_subcommand("sod", "decomposition ledgers");
  sod_cmd->require_subcommand(1);
  std::string sod_file;
  auto* s_check = sod_cmd->add_subcommand("check", "run a .sod or .mot script");
  s_check->add_option("file", sod_file, "script path")->required();
  long n_odd_max = 15;
  auto* s_cons = sod_cmd->add_subcommand("conjecture-consistency", "hilb2 = fano + pencil");
  s_cons->add_option("--n-odd-max", n_odd_max, "largest odd n")->check(CLI::Range(3L, 10001L));
  std::string ob_builtin;
  std::string ob_candidate;
  std::optional<std::string> ob_expect;
  auto* s_ob = sod_cmd->add_subcommand("obstruction", "HH0 embedding obstruction");
  s_ob->add_option("--builtin", ob_builtin, "threefold X")->required();
  s_ob->add_option("--candidate", ob_candidate, "candidate subvariety of X^[2]");
  s_ob->add_option("--expect", ob_expect, "OBSTRUCTED or INCONCLUSIVE; exit 1 on mismatch");

  // motive
  auto* motive_cmd = app.add_subcommand("motive", "Grothendieck ring expressions");
  motive_cmd->require_subcommand(1);
  std::string expr;
  bool motive_json = false;
  auto* m_eval = motive_cmd->add_subcommand("eval", "evaluate and print canonically");
  m_eval->add_option("expr", expr, "expression")->required();
  m_eval->add_flag("--json", motive_json, "JSON output");
  std::string motive_file;
  auto* m_check = motive_cmd->add_subcommand("check", "run a .mot script");
  m_check->add_option("file", motive_file, "script path")->required();

  // verify-all
  bool verify_json = false;
  std::vector<std::string> overrides;
  auto* v_cmd = app.add_subcommand("verify-all", "run every golden check");
  v_cmd->add_flag("--json", verify_json, "JSON output");
  v_cmd->add_option("--override", overrides, "replace a builtin diamond: NAME=FILE");

  auto* b_cmd = app.add_subcommand("builtins", "list embedded diamonds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (hodge_cmd->parsed()) {
      if (h_hh0->parsed()) {
        const Integer v = hodge::hh0(load_diamond(ha.diamond, ha.builtin));
        out << to_string(v) << "\n";
        if (hh0_expect && parse_integer(*hh0_expect) != v) return kCheckFailed;
        return kPass;
      }
      const auto d = load_diamond(ha.diamond, ha.builtin);
      if (h_hilb2->parsed()) return emit_diamond(ctx, hodge::hilbert_square(d), ha);
      if (h_sym2->parsed()) return emit_diamond(ctx, hodge::sym2(d), ha);
      return emit_diamond(ctx, d, ha);
    }
    if (fano_cmd->parsed()) {
      if (f_dims->parsed()) return fano_dims(ctx, fa);
      if (f_codim->parsed()) {
        if (!fa.grid && fa.n == 0) throw UsageError("--n and --k, or --grid, are required");
        return fano_codim(ctx, fa);
      }
      if (f_split->parsed()) return fano_splittings(ctx, fa);
      if (f_sod->parsed()) return fano_sodcounts(ctx, fa);
      if (f_regime->parsed()) {
        out << fano::to_string(fano::emptiness_threshold(fano::parse_family(fa.family), fa.n,
                                                         need(fa.k, "--k")))
            << "\n";
        return kPass;
      }
      if (f_shape->parsed()) return fano_shape(ctx, fa);
      if (f_taut->parsed()) return fano_taut(ctx, fa);
      const auto row = fano::degree_classification(fa.degree);
      out << row.degree << ": " << row.description << "\n";
      return kPass;
    }
    if (sod_cmd->parsed()) {
      if (s_check->parsed()) return sod_check(ctx, sod_file);
      if (s_cons->parsed()) return sod_consistency(ctx, n_odd_max);
      return sod_obstruction(ctx, ob_builtin, ob_candidate, ob_expect);
    }
    if (motive_cmd->parsed()) {
      if (m_check->parsed()) return sod_check(ctx, motive_file);
      const auto m = dsl::eval_motive(dsl::parse_expr(expr));
      if (motive_json) out << motive::to_json(m).dump() << "\n";
      else out << dsl::print_canonical(m) << "\n";
      return kPass;
    }
    if (v_cmd->parsed()) return verify_all(ctx, verify_json, overrides);
    if (b_cmd->parsed()) {
      for (const auto& n : builtins::names()) out << n << "\n";
      out << "curve:G (any genus G >= 0)\n";
      return kPass;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace flipcalc::cli
