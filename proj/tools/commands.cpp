#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "nearsemi/axioms.hpp"
#include "nearsemi/cantor_bernstein.hpp"
#include "nearsemi/center.hpp"
#include "nearsemi/congruence.hpp"
#include "nearsemi/dot.hpp"
#include "nearsemi/enumerate.hpp"
#include "nearsemi/format.hpp"
#include "nearsemi/ideal.hpp"
#include "nearsemi/mv.hpp"
#include "nearsemi/parallel.hpp"

namespace nearsemi::cli {

  namespace {
    //! Bad input that is the caller's fault: exit 2 with the message.
    class InputError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::size_t threads   = default_threads();
      std::size_t max_size  = kDefaultMaxEnumerationSize;
      std::size_t threshold = kDefaultSubsetScanThreshold;
    };

    std::string join_args(std::vector<std::string> const& args) {
      std::string out = "nearsemi";
      for (auto const& a : args) {
        out += ' ' + a;
      }
      return out;
    }

    FiniteAlgebra load_algebra(std::string const& path, std::string* kind = nullptr) {
      auto doc = load_document(path);
      if (doc.is_mv()) {
        throw InputError(path + ": expected an algebra of kind inrs, luk-nrs or luk-rs, found mv");
      }
      if (kind != nullptr) {
        *kind = doc.kind;
      }
      return std::move(*doc.algebra);
    }

    Element resolve(FiniteAlgebra const& alg, std::string const& ref, char const* what) {
      auto e = alg.find_element(ref);
      if (!e) {
        throw InputError(std::string("unknown element '") + ref + "' for " + what
                         + " (expected a name or an index below " + std::to_string(alg.size())
                         + ")");
      }
      return *e;
    }

    std::string legend(std::vector<std::string> const& names) {
      std::string out = "elements (index=name):";
      for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? ", " : " ") + std::to_string(i) + "=" + names[i];
      }
      return out;
    }

    std::string named(FiniteAlgebra const& alg, Element e) {
      return alg.name(e) + " [" + std::to_string(e) + "]";
    }

    // Checks that hold in every algebra keep their verdicts on any input.
    bool universal_check(std::string const& id) {
      static std::set<std::string> const ids{
          "substitution-property", "lattice-closure", "polynomial-closure-generates-theta"};
      return ids.contains(id);
    }

    //! Results established only for Lukasiewicz near semirings are recorded
    //! as INFO when the input is not one.
    void scope_to_class(std::vector<Finding>& findings, bool lukasiewicz) {
      if (lukasiewicz) {
        return;
      }
      for (auto& f : findings) {
        if (is_adverse(f.verdict) && !universal_check(f.id)) {
          f.verdict = Verdict::info;
          f.detail  = "not expected outside luk-nrs: " + f.detail;
        }
      }
    }

    void append(Section& s, std::vector<Finding> const& findings) {
      s.findings.insert(s.findings.end(), findings.begin(), findings.end());
    }

    void input_section(Report& report, FiniteAlgebra const& alg, std::string const& path,
                       std::string const& kind) {
      auto& s = report.add_section("input");
      s.lines.push_back("file: " + path);
      s.lines.push_back("kind: " + kind + ", size: " + std::to_string(alg.size()));
      s.lines.push_back(legend(alg.names()));
    }

    std::vector<std::vector<bool>> order_matrix(std::size_t m, auto const& below) {
      std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          leq[i][j] = below(i, j);
        }
      }
      return leq;
    }

    void covering_lines(Section& s, char const* prefix, std::vector<std::vector<bool>> const& leq) {
      auto const pairs = covering_pairs(leq);
      s.lines.push_back("covering pairs: " + std::to_string(pairs.size()));
      for (auto const& [lo, hi] : pairs) {
        s.lines.push_back("  " + std::string(prefix) + std::to_string(lo) + " < " + prefix
                          + std::to_string(hi));
      }
    }

    int emit(Report const& report, std::ostream& out) {
      report.render(out);
      return report.exit_status();
    }

    int cmd_check(Options const&, std::string const& path, std::string const& cls_flag,
                  std::string const& command, std::ostream& out) {
      auto doc = load_document(path);
      Report report(command);
      if (doc.is_mv()) {
        auto& in = report.add_section("input");
        in.lines.push_back("file: " + path);
        in.lines.push_back("kind: mv, size: " + std::to_string(doc.mv->size()));
        in.lines.push_back(legend(doc.mv->names()));
        append(report.add_section("mv axioms"), check_mv_axioms(*doc.mv));
        return emit(report, out);
      }
      std::string const cls_name = cls_flag.empty() ? doc.kind : cls_flag;
      auto const        cls      = parse_algebra_class(cls_name);
      if (!cls) {
        throw InputError("unknown class '" + cls_name + "' (expected inrs, luk-nrs or luk-rs)");
      }
      input_section(report, *doc.algebra, path, doc.kind);
      auto const axioms = check_axioms(*doc.algebra, *cls);
      auto&      s      = report.add_section(std::string("axioms for class ") + to_string(*cls));
      append(s, axioms.findings());
      s.lines.push_back(axioms.admitted() ? "admitted" : "not admitted");
      return emit(report, out);
    }

    int cmd_congruences(Options const& opt, std::string const& path, std::string const& command,
                        std::ostream& out) {
      std::string kind;
      auto const  alg = load_algebra(path, &kind);
      Report      report(command);
      input_section(report, alg, path, kind);
      auto const con = all_congruences(alg, opt.threads);
      auto&      s   = report.add_section("congruence lattice");
      s.lines.push_back("congruences: " + std::to_string(con.size()));
      for (std::size_t i = 0; i < con.size(); ++i) {
        s.lines.push_back("  theta" + std::to_string(i) + " = " + con[i].to_string(alg)
                          + "  kernel " + format_set(alg, con[i].block_containing(alg.zero())));
      }
      covering_lines(s, "theta",
                     order_matrix(con.size(), [&](auto i, auto j) { return con[i].refines(con[j]); }));
      append(s, congruence_lattice_report(alg, con));

      bool const luk       = satisfies(alg, AlgebraClass::luk_nrs);
      auto       malcev    = malcev_and_regularity_report(alg);
      auto       werner    = werner_report(alg);
      scope_to_class(malcev, luk);
      scope_to_class(werner, luk);
      append(report.add_section("malcev term and 0-regularity"), malcev);
      append(report.add_section("polynomial pair closure"), werner);
      return emit(report, out);
    }

    int cmd_ideals(Options const& opt, std::string const& path, std::string const& command,
                   std::ostream& out) {
      std::string kind;
      auto const  alg = load_algebra(path, &kind);
      Report      report(command);
      input_section(report, alg, path, kind);
      bool const luk     = satisfies(alg, AlgebraClass::luk_nrs);
      auto const lattice = all_ideals(alg, opt.threshold, opt.threads);
      auto&      s       = report.add_section("ideal lattice");
      s.lines.push_back("ideals: " + std::to_string(lattice.ideals.size()));
      for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
        s.lines.push_back("  I" + std::to_string(i) + " = " + format_set(alg, lattice.ideals[i])
                          + "  pseudocomplement I"
                          + std::to_string(lattice.pseudocomplement[i]));
      }
      covering_lines(s, "I", lattice.contains);
      auto checks = ideal_lattice_report(alg, opt.threshold);
      scope_to_class(checks, luk);
      append(s, checks);

      auto  skel = skeleton(alg);
      auto& k    = report.add_section("skeleton");
      for (auto const& m : skel.members) {
        k.lines.push_back("  " + format_set(alg, m));
      }
      std::vector<Finding> own;
      for (auto const& f : skel.checks) {
        if (f.id.starts_with("skeleton")) {
          own.push_back(f);
        }
      }
      if (own.empty()) {
        k.lines.push_back("skeleton checks skipped: the ideal lattice checks above did not pass");
      }
      scope_to_class(own, luk);
      append(k, own);
      return emit(report, out);
    }

    int cmd_center(Options const&, std::string const& path, std::string const& command,
                   std::ostream& out) {
      std::string kind;
      auto const  alg = load_algebra(path, &kind);
      Report      report(command);
      input_section(report, alg, path, kind);
      auto const ce = center(alg);
      auto&      s  = report.add_section("center");
      s.lines.push_back("central elements: " + std::to_string(ce.elements.size()));
      for (std::size_t i = 0; i < ce.elements.size(); ++i) {
        s.lines.push_back("  " + named(alg, ce.elements[i]) + "  complement "
                          + named(alg, ce.elements[ce.complement[i]]));
      }
      for (Element e = 0; e < alg.size(); ++e) {
        auto const c = is_central(alg, e, CentralityMethod::syntactic);
        if (!c.central) {
          s.lines.push_back("  not central: " + named(alg, e) + "  " + c.witness);
        }
      }
      covering_lines(s, "e", order_matrix(ce.elements.size(), [&](auto i, auto j) {
                       return leq(alg, ce.elements[i], ce.elements[j]);
                     }));
      auto checks = center_decomposition_report(alg);
      scope_to_class(checks, satisfies(alg, AlgebraClass::luk_nrs));
      append(s, checks);
      return emit(report, out);
    }

    int cmd_decompose(Options const&, std::string const& path, std::string const& element,
                      std::string const& command, std::ostream& out) {
      std::string kind;
      auto const  alg = load_algebra(path, &kind);
      Element     e   = resolve(alg, element, "--element");
      Report      report(command);
      input_section(report, alg, path, kind);
      auto& s     = report.add_section("decomposition at " + named(alg, e));
      auto  check = is_central(alg, e);
      if (!check.central) {
        s.findings.push_back(fail("central", named(alg, e) + " is not central", check.witness));
        return emit(report, out);
      }
      auto const d = decompose(alg, e);
      auto       members = [&](IntervalAlgebra const& iv) {
        std::string text;
        for (auto p : iv.embedding) {
          text += (text.empty() ? "" : ", ") + alg.name(p);
        }
        return "{" + text + "}";
      };
      s.lines.push_back("factor [0," + alg.name(d.factor.top) + "] = " + members(d.factor));
      s.lines.push_back("cofactor [0," + alg.name(d.cofactor.top) + "] = " + members(d.cofactor));
      auto const& target = d.pair_map.target();
      for (Element a = 0; a < alg.size(); ++a) {
        s.lines.push_back("  " + alg.name(a) + " -> " + target.name(d.pair_map(a)));
      }
      s.findings.push_back(d.pair_map.bijective()
                               ? pass("decompose", "pair map is a verified isomorphism")
                               : fail("decompose", "pair map is not bijective", "see map table"));
      append(s, central_ideal_check(alg, e));
      return emit(report, out);
    }

    int cmd_principal_ideal(Options const&, std::string const& path, std::string const& element,
                            std::string const& command, std::ostream& out) {
      std::string kind;
      auto const  alg = load_algebra(path, &kind);
      Element     a   = resolve(alg, element, "--element");
      Report      report(command);
      input_section(report, alg, path, kind);
      auto const p = principal_ideal(alg, a);
      auto&      s = report.add_section("principal ideal I(" + alg.name(a) + ")");
      s.lines.push_back("via theta(a,0): " + format_set(alg, p.via_congruence));
      s.lines.push_back("via polynomials: " + format_set(alg, p.via_polynomials));
      if (p.agree) {
        s.findings.push_back(Finding{"principal-ideal", Verdict::agree,
                                     "I(" + alg.name(a) + ") = " + format_set(alg, p.via_congruence),
                                     {}});
      } else {
        s.findings.push_back(fail("principal-ideal", "the two constructions differ",
                                  format_set(alg, p.via_congruence) + " vs "
                                      + format_set(alg, p.via_polynomials)));
      }
      return emit(report, out);
    }

    int cmd_claims(Options const& opt, std::string const& path, std::string const& command,
                   std::ostream& out) {
      std::string kind;
      auto const  alg = load_algebra(path, &kind);
      Report      report(command);
      input_section(report, alg, path, kind);
      std::size_t const n = alg.size();
      auto&             s = report.add_section("semiring ideal description");
      if (n > opt.threshold) {
        s.findings.push_back(Finding{"semiring-ideal-prop", Verdict::info,
                                     "skipped: size " + std::to_string(n) + " exceeds threshold "
                                         + std::to_string(opt.threshold),
                                     {}});
      } else {
        std::size_t agree = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
          auto f = semiring_claims_report(alg, ElementSet(n, bits));
          if (f.verdict == Verdict::agree) {
            ++agree;
          } else {
            s.findings.push_back(std::move(f));
          }
        }
        s.lines.push_back("subsets compared: " + std::to_string(std::uint64_t{1} << n)
                          + ", agreeing: " + std::to_string(agree));
      }
      auto&       p     = report.add_section("principal ideals as a.A");
      std::size_t agree = 0;
      for (Element a = 0; a < n; ++a) {
        auto f = semiring_claims_report(alg, a);
        if (f.verdict == Verdict::agree) {
          ++agree;
        } else {
          p.findings.push_back(std::move(f));
        }
      }
      p.lines.push_back("elements compared: " + std::to_string(n) + ", agreeing: "
                        + std::to_string(agree));
      return emit(report, out);
    }

    int cmd_to_mv(std::string const& path, std::ostream& out, std::ostream& err) {
      auto const alg = load_algebra(path);
      if (!satisfies(alg, AlgebraClass::luk_rs)) {
        err << "to-mv: " << path << " is not a luk-rs algebra; run `check --class luk-rs`\n";
        return kExitAdverse;
      }
      out << serialize(to_mv(alg));
      return kExitPass;
    }

    int cmd_from_mv(std::string const& path, std::ostream& out, std::ostream& err) {
      auto doc = load_document(path);
      if (!doc.is_mv()) {
        throw InputError(path + ": expected an algebra of kind mv, found " + doc.kind);
      }
      if (!is_mv_algebra(*doc.mv)) {
        err << "from-mv: " << path << " fails the MV axioms; run `check`\n";
        return kExitAdverse;
      }
      out << serialize(from_mv(*doc.mv), "luk-rs");
      return kExitPass;
    }

    int cmd_roundtrip(std::string const& path, std::string const& command, std::ostream& out) {
      auto   doc = load_document(path);
      Report report(command);
      if (doc.is_mv()) {
        auto& in = report.add_section("input");
        in.lines.push_back("file: " + path);
        in.lines.push_back("kind: mv, size: " + std::to_string(doc.mv->size()));
        in.lines.push_back(legend(doc.mv->names()));
        auto& s = report.add_section("round trip");
        append(s, check_mv_axioms(*doc.mv));
        s.findings.push_back(roundtrip_check(*doc.mv));
        return emit(report, out);
      }
      auto const& alg = *doc.algebra;
      input_section(report, alg, path, doc.kind);
      auto& s = report.add_section("round trip");
      append(s, check_axioms(alg, AlgebraClass::luk_rs).findings());
      s.findings.push_back(roundtrip_check(alg));
      append(s, check_mv_axioms(to_mv(alg)));
      s.findings.push_back(mv_ideal_correspondence(alg));
      return emit(report, out);
    }

    struct CbArgs {
      std::string gamma;
      std::string beta;
      std::string a;
      std::string b;
      bool        search = false;
      std::size_t cap    = kDefaultCbSearchCap;
    };

    int cmd_cb(Options const& opt, std::string const& path_a, std::string const& path_b,
               CbArgs const& args, std::string const& command, std::ostream& out) {
      std::string kind_a;
      std::string kind_b;
      auto        alg_a = load_algebra(path_a, &kind_a);
      auto        alg_b = load_algebra(path_b, &kind_b);
      Report      report(command);
      input_section(report, alg_a, path_a, kind_a);
      input_section(report, alg_b, path_b, kind_b);
      CBReport cb;
      if (args.search) {
        cb = cb_search(alg_a, alg_b, args.cap, opt.threads);
      } else {
        if (args.gamma.empty() || args.beta.empty()) {
          throw InputError("cb needs either --search or both --gamma and --beta");
        }
        Element const a     = args.a.empty() ? alg_a.one() : resolve(alg_a, args.a, "--a");
        Element const b     = args.b.empty() ? alg_b.one() : resolve(alg_b, args.b, "--b");
        auto          gamma = load_map(args.gamma, alg_b);
        auto          beta  = load_map(args.beta, alg_a);
        if (gamma.size() != alg_a.size() || beta.size() != alg_b.size()) {
          throw InputError("map length mismatch: --gamma needs " + std::to_string(alg_a.size())
                           + " entries, --beta needs " + std::to_string(alg_b.size()));
        }
        try {
          cb = cb_report(make_cb_instance(alg_a, alg_b, a, b, std::move(gamma), std::move(beta)));
        } catch (PreconditionError const& ex) {
          cb.findings.push_back(fail("cb-instance", "instance rejected", ex.what()));
        } catch (StructureError const& ex) {
          cb.findings.push_back(fail("cb-instance", "instance rejected", ex.what()));
        }
      }
      auto& s = report.add_section("cantor-bernstein construction");
      s.lines = cb.lines;
      append(s, cb.findings);
      return emit(report, out);
    }

    struct EnumerateArgs {
      std::size_t   size = 0;
      std::string   cls  = "luk-nrs";
      std::string   out_dir;
      std::uint64_t max_nodes = kDefaultMaxNodes;
      std::uint64_t max_results = kDefaultMaxResults;
      std::size_t   resume = 0;
    };

    void write_algebras(std::vector<FiniteAlgebra> const& algs, std::string const& dir,
                        std::string const& kind, Section& s) {
      std::filesystem::create_directories(dir);
      for (auto const& alg : algs) {
        auto const    name = canonical_form(alg).hash() + ".alg";
        std::ofstream file(std::filesystem::path(dir) / name, std::ios::binary);
        if (!file) {
          throw InputError("cannot write '" + (std::filesystem::path(dir) / name).string() + "'");
        }
        file << serialize(alg, kind);
      }
      s.lines.push_back("wrote " + std::to_string(algs.size()) + " files to " + dir);
    }

    int cmd_enumerate(Options const& opt, EnumerateArgs const& args, std::string const& command,
                      std::ostream& out, std::ostream& err) {
      auto const cls = parse_algebra_class(args.cls);
      if (!cls) {
        throw InputError("unknown class '" + args.cls + "' (expected inrs, luk-nrs or luk-rs)");
      }
      if (args.size == 0) {
        throw InputError("--size must be positive");
      }
      EnumerationTask task{args.size, *cls, opt.max_size, args.max_nodes, args.max_results,
                           opt.threads, args.resume};
      Report report(command);
      auto&  s = report.add_section("enumeration of " + args.cls + " algebras of size "
                                    + std::to_string(args.size));
      std::vector<FiniteAlgebra> algs;
      bool                       complete = true;
      try {
        algs = enumerate(task);
      } catch (EnumerationIncomplete const& ex) {
        algs     = ex.partial();
        complete = false;
        err << "enumerate: budget exhausted after task " << ex.resume_token() << " of "
            << ex.task_count() << "; rerun with --resume " << ex.resume_token()
            << " for the rest\n";
      }
      s.lines.push_back((complete ? "count: " : "partial count: ") + std::to_string(algs.size()));
      for (auto const& alg : algs) {
        s.lines.push_back("  " + canonical_form(alg).hash());
      }
      if (!args.out_dir.empty()) {
        write_algebras(algs, args.out_dir, args.cls, s);
      }
      std::size_t failing = 0;
      for (auto const& alg : algs) {
        failing += satisfies(alg, *cls) ? 0 : 1;
      }
      s.findings.push_back(failing == 0 ? pass("enumerated-satisfy-class",
                                               std::to_string(algs.size()) + " algebras rechecked")
                                        : fail("enumerated-satisfy-class",
                                               std::to_string(failing) + " outputs fail the class",
                                               "rerun check on the written files"));
      report.render(out);
      if (!complete) {
        return kExitUsage;
      }
      return report.exit_status();
    }

    int cmd_dot(Options const& opt, std::string const& path, std::string const& lattice,
                std::ostream& out) {
      auto const alg = load_algebra(path);
      if (lattice == "con") {
        out << congruence_lattice_dot(alg, all_congruences(alg, opt.threads));
      } else if (lattice == "id") {
        out << ideal_lattice_dot(alg, all_ideals(alg, opt.threshold, opt.threads).ideals);
      } else {
        out << center_lattice_dot(alg, center(alg).elements);
      }
      return kExitPass;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite iota-near semiring workbench", "nearsemi"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-size", opt.max_size, "largest size enumerate accepts");
    app.add_option("--threshold", opt.threshold,
                   "largest size for exhaustive subset scans (ideals, claims)");

    std::string file;
    std::string file_b;
    std::string cls;
    std::string element;
    std::string lattice;
    CbArgs        cb;
    EnumerateArgs en;

    auto* check = app.add_subcommand("check", "check the axioms of a class");
    check->add_option("file", file)->required();
    check->add_option("--class", cls, "inrs, luk-nrs or luk-rs (default: the file's kind)");

    auto* congruences = app.add_subcommand("congruences", "congruence lattice and Mal'cev checks");
    congruences->add_option("file", file)->required();

    auto* ideals = app.add_subcommand("ideals", "ideal lattice, pseudocomplements, skeleton");
    ideals->add_option("file", file)->required();

    auto* center_cmd = app.add_subcommand("center", "central elements and their laws");
    center_cmd->add_option("file", file)->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "A ~ [0,e] x [0,e^a] for central e");
    decompose_cmd->add_option("file", file)->required();
    decompose_cmd->add_option("--element", element, "name or index")->required();

    auto* principal = app.add_subcommand("principal-ideal", "I(a) two ways");
    principal->add_option("file", file)->required();
    principal->add_option("--element", element, "name or index")->required();

    auto* claims = app.add_subcommand("claims", "semiring descriptions of ideals versus (I1)/(I2)");
    claims->add_option("file", file)->required();

    auto* to_mv_cmd = app.add_subcommand("to-mv", "print the MV-algebra of a luk-rs algebra");
    to_mv_cmd->add_option("file", file)->required();

    auto* from_mv_cmd = app.add_subcommand("from-mv", "print the luk-rs algebra of an MV-algebra");
    from_mv_cmd->add_option("file", file)->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "table-exact translation round trip");
    roundtrip->add_option("file", file)->required();

    auto* cb_cmd = app.add_subcommand("cb", "Cantor-Bernstein construction for A and B");
    cb_cmd->add_option("fileA", file)->required();
    cb_cmd->add_option("fileB", file_b)->required();
    auto* search = cb_cmd->add_flag("--search", cb.search, "search all central pairs");
    cb_cmd->add_option("--gamma", cb.gamma, "map file A -> [0,b]")->excludes(search);
    cb_cmd->add_option("--beta", cb.beta, "map file B -> [0,a]")->excludes(search);
    cb_cmd->add_option("--a", cb.a, "central element of A (default 1)")->excludes(search);
    cb_cmd->add_option("--b", cb.b, "central element of B (default 1)")->excludes(search);
    cb_cmd->add_option("--cap", cb.cap, "limit on |Ce(A)| * |Ce(B)| for --search");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all algebras of a size up to isomorphism");
    enumerate_cmd->add_option("--size", en.size)->required();
    enumerate_cmd->add_option("--class", en.cls, "inrs, luk-nrs or luk-rs");
    enumerate_cmd->add_option("--out", en.out_dir, "directory for <hash>.alg files");
    enumerate_cmd->add_option("--max-nodes", en.max_nodes, "search node budget");
    enumerate_cmd->add_option("--max-results", en.max_results, "result budget");
    enumerate_cmd->add_option("--resume", en.resume, "resume token of a partial run");

    auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
    dot->add_option("file", file)->required();
    dot->add_option("--lattice", lattice)->required()->check(CLI::IsMember({"con", "id", "ce"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitPass : kExitUsage;
    }

    std::string const command = join_args(args);
    try {
      if (check->parsed()) {
        return cmd_check(opt, file, cls, command, out);
      }
      if (congruences->parsed()) {
        return cmd_congruences(opt, file, command, out);
      }
      if (ideals->parsed()) {
        return cmd_ideals(opt, file, command, out);
      }
      if (center_cmd->parsed()) {
        return cmd_center(opt, file, command, out);
      }
      if (decompose_cmd->parsed()) {
        return cmd_decompose(opt, file, element, command, out);
      }
      if (principal->parsed()) {
        return cmd_principal_ideal(opt, file, element, command, out);
      }
      if (claims->parsed()) {
        return cmd_claims(opt, file, command, out);
      }
      if (to_mv_cmd->parsed()) {
        return cmd_to_mv(file, out, err);
      }
      if (from_mv_cmd->parsed()) {
        return cmd_from_mv(file, out, err);
      }
      if (roundtrip->parsed()) {
        return cmd_roundtrip(file, command, out);
      }
      if (cb_cmd->parsed()) {
        return cmd_cb(opt, file, file_b, cb, command, out);
      }
      if (enumerate_cmd->parsed()) {
        return cmd_enumerate(opt, en, command, out, err);
      }
      if (dot->parsed()) {
        return cmd_dot(opt, file, lattice, out);
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return kExitUsage;
    } catch (InputError const& e) {
      err << "input error: " << e.what() << '\n';
      return kExitUsage;
    } catch (ResourceError const& e) {
      err << "limit exceeded: " << e.what() << '\n';
      return kExitUsage;
    } catch (StructureError const& e) {
      err << "malformed algebra: " << e.what() << '\n';
      return kExitUsage;
    } catch (std::runtime_error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitUsage;
  }

}  // namespace nearsemi::cli
