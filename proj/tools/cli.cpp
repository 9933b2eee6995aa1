#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hbasis/basis_io.hpp"
#include "hbasis/bounds.hpp"
#include "hbasis/construct.hpp"
#include "hbasis/cover.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/parallel.hpp"
#include "hbasis/search.hpp"
#include "hbasis/sidon.hpp"
#include "hbasis/sumset.hpp"
#include "hbasis/table.hpp"

namespace hbasis::cli {

namespace {

struct Options {
  // global
  std::string emit;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
  std::string format = "text";

  // shared numeric parameters
  std::optional<std::uint64_t> n;
  std::optional<unsigned> h;
  std::optional<unsigned> k;
  std::optional<unsigned> a;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> phi;
  bool auto_params = false;
  std::string set_file;
  std::uint64_t budget = kDefaultNodeBudget;
  bool oracle = false;
  unsigned h_max = 3;
  unsigned k_max = 5;
  std::string kind = "search";
};

// Parameter echo for the manifest. Execution-only knobs (--threads, --emit)
// are left out so payloads do not depend on them.
class Echo {
 public:
  template <typename T>
  void add(const std::string& key, const std::optional<T>& v) {
    if (v) params_[key] = std::to_string(*v);
  }
  void add(const std::string& key, const std::string& v) {
    if (!v.empty()) params_[key] = v;
  }
  void add(const std::string& key, std::uint64_t v) { params_[key] = std::to_string(v); }
  void add_flag(const std::string& key, bool v) {
    if (v) params_[key] = "true";
  }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : params_) {
      if (!out.empty()) out += ';';
      out += k + '=' + v;
    }
    return out;
  }

 private:
  std::map<std::string, std::string> params_;
};

void add_manifest(Document& doc, const std::string& sub, const Echo& echo, int outcome) {
  auto& m = doc.section("manifest");
  m.set("tool", std::string("hbasis"));
  m.set("version", std::string(kToolVersion));
  m.set("subcommand", sub);
  m.set("params", echo.str());
  m.set("outcome", std::uint64_t(outcome));
}

std::string manifest_comment(const Document& doc) {
  std::string out;
  for (const auto& [k, v] : doc.find("manifest")->entries) out += "# " + k + " = " + v + '\n';
  return out;
}

void write_payload(const Options& opt, const std::string& payload, std::ostream& out) {
  if (opt.emit.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(opt.emit, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + opt.emit);
  file << payload;
}

// Puts the manifest first, then the data sections in the order they were added.
std::string finish(Document data, const std::string& sub, const Echo& echo, int outcome) {
  Document doc;
  add_manifest(doc, sub, echo, outcome);
  for (const auto& s : data.sections()) {
    auto& dst = doc.section(s.name);
    for (const auto& [k, v] : s.entries) dst.set(k, v);
  }
  return doc.str();
}

template <typename T>
T required(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string("missing required option ") + flag);
  return *v;
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::uint64_t n = required(opt.n, "--n");
  const unsigned h = required(opt.h, "--h");
  Echo echo;
  echo.add("n", n);
  echo.add("h", std::uint64_t{h});
  echo.add("k", opt.k);
  echo.add("a", opt.a);
  echo.add_flag("auto", opt.auto_params);
  echo.add("seed", opt.seed);

  if (opt.k.has_value() != opt.a.has_value()) throw InvalidInput("--k and --a must be given together");
  if (opt.k && opt.auto_params) throw InvalidInput("--auto conflicts with --k/--a");
  std::optional<PlanOverrides> overrides;
  if (opt.k) overrides = PlanOverrides{*opt.k, *opt.a};

  const ConstructionPlan plan = plan_params(n, h, overrides);
  const ConstructionResult res = build_composite_basis(plan);
  const int code = res.verified ? kSuccess : kVerificationFailed;

  Document doc;
  auto& pl = doc.section("plan");
  pl.set("n", plan.n).set("h", std::uint64_t{plan.h}).set("p", plan.p);
  pl.set("k", std::uint64_t{plan.k}).set("a", std::uint64_t{plan.a});
  pl.set("m", plan.m).set("q", plan.q).set("p_sidon", plan.p_sidon);
  pl.set("tau", format_real(plan.tau));
  pl.set("feasibility", to_string(plan.feasibility));
  pl.set("predicted_size", plan.predicted_size);

  const auto& st = res.stats;
  auto& led = doc.section("ledger");
  led.set("size_A", std::uint64_t{st.a}).set("size_B", std::uint64_t{st.b});
  led.set("size_C", std::uint64_t{st.c}).set("size_D", std::uint64_t{st.d});
  led.set("size_G", std::uint64_t{st.total}).set("size_sum", std::uint64_t{st.sum});
  led.set("components_disjoint", st.disjoint);
  led.set("max_A", st.a_max).set("max_B", st.b_max).set("max_C", st.c_max).set("max_D", st.d_max);
  led.set("digit_base", st.digit_base);
  led.set("H_integer_size", std::uint64_t{st.h_integer});
  led.set("H_residue_size", std::uint64_t{st.h_residues});
  led.set("complement_union", std::uint64_t{res.complement.union_size});
  led.set("complement_total_shifts", std::uint64_t{res.complement.total_shifts});
  led.set("complement_bound",
          format_real(complement_size_bound(plan.q, st.h_residues, plan.k)));
  led.set("complement_over_budget", res.complement.over_budget);
  const double root = std::pow(static_cast<double>(n), 1.0 / h);
  led.set("size_G_over_n_root", format_real(static_cast<double>(st.total) / root));
  const CompositeBound t1 = zeta_upper_composite(h, static_cast<double>(n));
  led.set("composite_bound_main_term", format_real(t1.value));
  led.set("composite_bound_regime_met", t1.precondition_met);

  auto& ver = doc.section("verification");
  ver.set("checked_range", "0.." + std::to_string(n));
  ver.set("ok", res.verified);
  ver.set("first_gap", res.first_gap ? std::to_string(*res.first_gap) : std::string("none"));

  BasisFile bf;
  bf.h = h;
  bf.n = n;
  bf.elements.assign(res.g.elements().begin(), res.g.elements().end());
  write_basis(doc, bf);

  write_payload(opt, finish(std::move(doc), "construct", echo, code), out);
  if (!res.verified) err << "construct: verification failed, first gap " << *res.first_gap << '\n';
  return code;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.set_file.empty()) throw InvalidInput("missing required option --set");
  const BasisFile file = read_basis_file(opt.set_file);
  const std::optional<unsigned> h = opt.h ? opt.h : file.h;
  const std::optional<std::uint64_t> n = opt.n ? opt.n : file.n;
  const unsigned hv = required(h, "--h");
  const std::uint64_t nv = required(n, "--n");
  Echo echo;
  echo.add("h", std::uint64_t{hv});
  echo.add("n", nv);
  echo.add("set", opt.set_file);

  const BasisSet set = BasisSet::from_sorted(file.elements);
  const Certificate cert = verify_basis(set, hv, nv);
  const int code = cert.ok ? kSuccess : kVerificationFailed;

  Document doc;
  BasisFile echoed = file;
  echoed.h = hv;
  echoed.n = nv;
  write_basis(doc, echoed);
  auto& ver = doc.section("verification");
  ver.set("checked_range", "0.." + std::to_string(nv));
  ver.set("ok", cert.ok);
  ver.set("first_gap", cert.first_gap ? std::to_string(*cert.first_gap) : std::string("none"));
  write_payload(opt, finish(std::move(doc), "verify", echo, code), out);
  if (!cert.ok) err << "verify: first gap " << *cert.first_gap << '\n';
  return code;
}

int cmd_sidon(const Options& opt, std::ostream& out, std::ostream&) {
  const unsigned k = required(opt.k, "--k");
  Echo echo;
  echo.add("k", std::uint64_t{k});
  Document doc;
  int code = kSuccess;

  if (opt.phi) {
    echo.add("phi", opt.phi);
    const PhiResult r = phi_exact(*opt.phi, k);
    BasisFile bf;
    bf.h = k;
    bf.n = *opt.phi;
    bf.elements = r.witness;
    write_basis(doc, bf);
    auto& sec = doc.section("phi");
    sec.set("range", "0.." + std::to_string(*opt.phi));
    sec.set("k", std::uint64_t{k});
    sec.set("size", std::uint64_t{r.size});
    sec.set("is_bk", is_bk(r.witness, k));
  } else {
    const std::uint64_t p = required(opt.p, "--p");
    echo.add("p", p);
    const SidonSet s = bose_chowla(p, k);
    const bool modular = is_bk(s.elements, k, s.order_modulus);
    const bool integer = is_bk(s.elements, k);
    code = modular && integer ? kSuccess : kVerificationFailed;
    BasisFile bf;
    bf.h = k;
    bf.n = s.order_modulus - 1;
    bf.elements = s.elements;
    bf.provenance["p"] = std::to_string(p);
    bf.provenance["k"] = std::to_string(k);
    bf.provenance["modulus"] = join_integers(s.field.modulus);
    bf.provenance["order_modulus"] = std::to_string(s.order_modulus);
    write_basis(doc, bf);
    auto& ver = doc.section("verification");
    ver.set("size", std::uint64_t{s.elements.size()});
    ver.set("is_bk_modular", modular);
    ver.set("is_bk_integer", integer);
  }
  write_payload(opt, finish(std::move(doc), "sidon", echo, code), out);
  return code;
}

int cmd_complement(const Options& opt, std::ostream& out, std::ostream&) {
  const std::uint64_t q = required(opt.q, "--q");
  const unsigned k = required(opt.k, "--k");
  if (opt.set_file.empty()) throw InvalidInput("missing required option --set");
  Echo echo;
  echo.add("q", q);
  echo.add("k", std::uint64_t{k});
  echo.add("set", opt.set_file);

  const BasisFile file = read_basis_file(opt.set_file);
  if (file.elements.back() >= q) throw InvalidInput("residue set members must lie in [0, q-1]");
  const ResidueSet base(q, file.elements);
  const ComplementFamily fam = k_complement(base, k);
  const int code = fam.complete ? kSuccess : kVerificationFailed;

  Document doc;
  auto& sec = doc.section("complement");
  sec.set("q", q).set("k", std::uint64_t{k});
  sec.set("base_size", std::uint64_t{base.size()});
  sec.set("round_budget", fam.round_budget).set("final_budget", fam.final_budget);
  for (std::size_t i = 0; i < fam.families.size(); ++i) {
    sec.set("family_" + std::to_string(i + 1), join_integers(fam.families[i].members()));
  }
  std::vector<std::uint64_t> sizes(fam.family_sizes.begin(), fam.family_sizes.end());
  sec.set("family_sizes", join_integers(sizes));
  sec.set("union_size", std::uint64_t{fam.union_size});
  sec.set("total_shifts", std::uint64_t{fam.total_shifts});
  if (q >= 2) sec.set("size_bound", format_real(complement_size_bound(q, base.size(), k)));
  sec.set("complete", fam.complete);
  sec.set("over_budget", fam.over_budget);
  write_payload(opt, finish(std::move(doc), "complement", echo, code), out);
  return code;
}

std::vector<TableRow> bound_rows(const std::vector<BoundReport>& reports, unsigned h,
                                 std::optional<std::uint64_t> k, std::optional<std::uint64_t> n) {
  std::vector<TableRow> rows;
  for (const auto& r : reports) {
    BoundRow row;
    row.h = h;
    row.k = k;
    row.n = n;
    row.bound = r.name;
    row.direction = to_string(r.direction);
    row.value = r.value;
    row.exact = r.exact ? rational_string(*r.exact) : std::string();
    row.dropped_terms = r.dropped_terms;
    rows.push_back(row);
  }
  return rows;
}

int cmd_bounds(const Options& opt, std::ostream& out, std::ostream&) {
  const unsigned h = required(opt.h, "--h");
  if (opt.k.has_value() == opt.n.has_value()) throw InvalidInput("bounds needs exactly one of --k or --n");
  Echo echo;
  echo.add("h", std::uint64_t{h});
  echo.add("k", opt.k);
  echo.add("n", opt.n);
  echo.add("format", opt.format);

  std::vector<BoundReport> reports;
  std::optional<std::uint64_t> k;
  if (opt.k) {
    k = *opt.k;
    reports = bounds_for_hk(h, *opt.k);
  } else {
    reports = bounds_for_hn(h, *opt.n);
  }

  std::string payload;
  if (opt.format == "csv") {
    Document manifest;
    add_manifest(manifest, "bounds", echo, kSuccess);
    const auto rows = bound_rows(reports, h, k, opt.n);
    payload = manifest_comment(manifest) + emit_table(TableKind::kBound, rows);
  } else {
    Document doc;
    for (const auto& r : reports) {
      auto& sec = doc.section("bound." + r.name);
      sec.set("inputs", r.inputs);
      sec.set("direction", to_string(r.direction));
      sec.set("value", format_real(r.value));
      if (r.exact) sec.set("exact", rational_string(*r.exact));
      sec.set("asymptotic_terms_dropped", r.dropped_terms.empty() ? std::string("none") : r.dropped_terms);
      if (r.precondition_met) sec.set("precondition_met", *r.precondition_met);
    }
    payload = finish(std::move(doc), "bounds", echo, kSuccess);
  }
  write_payload(opt, payload, out);
  return kSuccess;
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
  const unsigned h = required(opt.h, "--h");
  if (opt.k.has_value() == opt.n.has_value()) throw InvalidInput("search needs exactly one of --k or --n");
  Echo echo;
  echo.add("h", std::uint64_t{h});
  echo.add("k", opt.k);
  echo.add("n", opt.n);
  echo.add("budget", opt.budget);
  echo.add_flag("oracle", opt.oracle);

  Document doc;
  int code = kSuccess;
  if (opt.n) {
    const ZetaResult z = zeta_exact(h, *opt.n, opt.budget);
    auto& sec = doc.section("zeta");
    sec.set("h", std::uint64_t{h}).set("n", *opt.n);
    sec.set("k_min", std::uint64_t{z.k_min});
    sec.set("nodes", z.nodes_explored);
    sec.set("optimal", z.proof_of_optimality);
    BasisFile bf;
    bf.h = h;
    bf.n = *opt.n;
    bf.elements.assign(z.witness.elements().begin(), z.witness.elements().end());
    write_basis(doc, bf);
    if (!z.proof_of_optimality) code = kVerificationFailed;
  } else {
    const unsigned k = *opt.k;
    const SearchResult r = extremal_n(h, k, opt.budget);
    const RohrbachBracket br = rohrbach(h, k);
    auto& sec = doc.section("search");
    sec.set("h", std::uint64_t{h}).set("k", std::uint64_t{k});
    sec.set("value", r.value);
    sec.set("nodes", r.nodes_explored);
    sec.set("optimal", r.proof_of_optimality);
    sec.set("rohrbach_lower", format_real(to_double(br.lower)));
    sec.set("rohrbach_upper", br.upper);
    if (!r.proof_of_optimality) code = kVerificationFailed;
    if (opt.oracle) {
      const SearchResult o = oracle_exhaustive(h, k);
      const bool agree = o.value == r.value && o.witness == r.witness;
      auto& os = doc.section("oracle");
      os.set("value", o.value);
      os.set("witness", join_integers({o.witness.elements().begin(), o.witness.elements().end()}));
      os.set("subsets", o.nodes_explored);
      os.set("agrees", agree);
      if (!agree) {
        err << "search: oracle disagrees with branch and bound\n";
        code = kVerificationFailed;
      }
    }
    BasisFile bf;
    bf.h = h;
    bf.n = r.value;
    bf.elements.assign(r.witness.elements().begin(), r.witness.elements().end());
    write_basis(doc, bf);
  }
  write_payload(opt, finish(std::move(doc), "search", echo, code), out);
  return code;
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream&) {
  Echo echo;
  echo.add("h_max", std::uint64_t{opt.h_max});
  echo.add("k_max", std::uint64_t{opt.k_max});
  echo.add("kind", opt.kind);
  echo.add("budget", opt.budget);
  if (opt.h_max == 0 || opt.k_max == 0) throw InvalidInput("--h-max and --k-max must be >= 1");

  std::vector<TableRow> rows;
  TableKind kind;
  int code = kSuccess;
  if (opt.kind == "search") {
    kind = TableKind::kSearch;
    for (unsigned h = 1; h <= opt.h_max; ++h) {
      for (unsigned k = 1; k <= opt.k_max; ++k) {
        const SearchResult r = extremal_n(h, k, opt.budget);
        const RohrbachBracket br = rohrbach(h, k);
        SearchRow row;
        row.h = h;
        row.k = k;
        row.value = r.value;
        row.rohrbach_lower = to_double(br.lower);
        row.rohrbach_upper = br.upper;
        row.nodes = r.nodes_explored;
        row.optimal = r.proof_of_optimality;
        row.witness.assign(r.witness.elements().begin(), r.witness.elements().end());
        if (!r.proof_of_optimality) code = kVerificationFailed;
        rows.push_back(row);
      }
    }
  } else if (opt.kind == "bounds") {
    kind = TableKind::kBound;
    for (unsigned h = 1; h <= opt.h_max; ++h) {
      for (unsigned k = 1; k <= opt.k_max; ++k) {
        auto more = bound_rows(bounds_for_hk(h, k), h, k, std::nullopt);
        rows.insert(rows.end(), more.begin(), more.end());
      }
    }
  } else {
    throw InvalidInput("--kind must be search or bounds");
  }
  Document manifest;
  add_manifest(manifest, "table", echo, code);
  write_payload(opt, manifest_comment(manifest) + emit_table(kind, rows), out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hbasis: additive h-basis construction, verification and exact search"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  Options opt;

  auto add_globals = [&opt](CLI::App* sub) {
    sub->add_option("--emit", opt.emit, "Write the data payload to FILE instead of stdout");
    sub->add_option("--threads", opt.threads, "Cap on internal worker threads")->check(CLI::Range(1U, 1024U));
    sub->add_option("--seed", opt.seed, "Seed for randomized test-instance generation (recorded only)");
  };

  auto* construct = app.add_subcommand("construct", "Build and verify a composite h-basis of [0, n]");
  construct->add_option("--n", opt.n, "Interval end")->required();
  construct->add_option("--h", opt.h, "Number of addends")->required();
  construct->add_option("--k", opt.k, "Complement rounds (with --a)");
  construct->add_option("--a", opt.a, "Sidon/digit split (with --k)");
  construct->add_flag("--auto", opt.auto_params, "Choose k and a automatically (default)");
  add_globals(construct);

  auto* verify = app.add_subcommand("verify", "Check that a set is an h-basis of [0, n]");
  verify->add_option("--h", opt.h, "Number of addends (overrides the file)");
  verify->add_option("--n", opt.n, "Interval end (overrides the file)");
  verify->add_option("--set", opt.set_file, "Basis file")->required();
  add_globals(verify);

  auto* sidon = app.add_subcommand("sidon", "Bose-Chowla B_k set, or exact Phi_k(n) with --phi");
  sidon->add_option("--p", opt.p, "Field characteristic");
  sidon->add_option("--k", opt.k, "B_k parameter / field degree")->required();
  sidon->add_option("--phi", opt.phi, "Compute Phi_k(N) exhaustively instead");
  add_globals(sidon);

  auto* complement = app.add_subcommand("complement", "Greedy k-complement of a residue set in Z_q");
  complement->add_option("--q", opt.q, "Modulus")->required();
  complement->add_option("--k", opt.k, "Number of families")->required();
  complement->add_option("--set", opt.set_file, "Residue set file")->required();
  add_globals(complement);

  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  bounds->add_option("--h", opt.h, "Number of addends")->required();
  bounds->add_option("--k", opt.k, "Basis size");
  bounds->add_option("--n", opt.n, "Interval end");
  bounds->add_option("--format", opt.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  add_globals(bounds);

  auto* search = app.add_subcommand("search", "Exact n(h,k) (with --k) or zeta(h,n) (with --n)");
  search->add_option("--h", opt.h, "Number of addends")->required();
  search->add_option("--k", opt.k, "Basis size");
  search->add_option("--n", opt.n, "Interval end, for zeta(h, n)");
  search->add_option("--budget", opt.budget, "Node budget");
  search->add_flag("--oracle", opt.oracle, "Cross-check against exhaustive enumeration");
  add_globals(search);

  auto* table = app.add_subcommand("table", "CSV table of exact values or bounds over a grid");
  table->add_option("--h-max", opt.h_max, "Largest h");
  table->add_option("--k-max", opt.k_max, "Largest k");
  table->add_option("--kind", opt.kind, "search or bounds")->check(CLI::IsMember({"search", "bounds"}));
  table->add_option("--budget", opt.budget, "Node budget per search");
  add_globals(table);

  std::vector<const char*> argv{"hbasis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kInvalidParameters;
  }

  set_max_threads(opt.threads);
  const auto start = std::chrono::steady_clock::now();
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  int code = kSuccess;
  try {
    if (name == "construct") code = cmd_construct(opt, out, err);
    else if (name == "verify") code = cmd_verify(opt, out, err);
    else if (name == "sidon") code = cmd_sidon(opt, out, err);
    else if (name == "complement") code = cmd_complement(opt, out, err);
    else if (name == "bounds") code = cmd_bounds(opt, out, err);
    else if (name == "search") code = cmd_search(opt, out, err);
    else code = cmd_table(opt, out, err);
  } catch (const InvalidInput& e) {
    err << name << ": invalid input: " << e.what() << '\n';
    code = kInvalidParameters;
  } catch (const Infeasible& e) {
    err << name << ": infeasible: " << e.what() << '\n';
    code = kInvalidParameters;
  } catch (const GuardTripped& e) {
    err << name << ": guard tripped: " << e.what() << '\n';
    code = kGuardTripped;
  } catch (const std::overflow_error& e) {
    err << name << ": overflow: " << e.what() << '\n';
    code = kGuardTripped;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << name << ": exit " << code << ", wall time " << format_real(secs) << " s\n";
  return code;
}

}  // namespace hbasis::cli
