#include "gpe/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "gpe/report.hpp"
#include "gpe/verify.hpp"

namespace gpe {

namespace {

struct CommonOpts {
  i64 p = 3;
  int e = 2;
  i64 seed = 0;
  std::string modulus;
  std::string format = "json-lines";
  std::string out_path;
  bool unsafe_scale = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-p", o.p, "odd prime characteristic")->required();
  cmd->add_option("-e", o.e, "extension degree")->required();
  cmd->add_option("--seed", o.seed, "modulus search seed");
  cmd->add_option("--modulus", o.modulus,
                  "monic irreducible modulus, comma-separated coefficients "
                  "lowest degree first (overrides the seed search)");
  cmd->add_option("--format", o.format, "json-lines | csv | human");
  cmd->add_option("--out", o.out_path, "output path (default stdout)");
  cmd->add_flag("--unsafe-scale", o.unsafe_scale, "lift the scale guards");
}

FqField make_field(const CommonOpts& o) {
  PolyFp m = o.modulus.empty() ? find_irreducible(o.p, o.e, o.seed)
                               : poly_from_text(o.p, o.modulus);
  return FqField(o.p, o.e, m);
}

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output path: " + path);
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ostream* os_;
  std::unique_ptr<std::ofstream> file_;
};

i64 classify_guard(const CommonOpts& o) {
  return o.unsafe_scale ? (i64(1) << 40) : (i64(1) << 20);
}

i64 brute_guard(const CommonOpts& o) { return o.unsafe_scale ? 20000 : 729; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"constructions, isomorphism tests and profiles for "
               "central quotients of Heisenberg groups over F_{p^e}"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string n1_text, n2_text, kind = "subgroup", gen_bound = "all";
  bool slow = false;

  CLI::App* c_field = app.add_subcommand("field", "modulus and structure matrices");
  add_common(c_field, o);
  CLI::App* c_family = app.add_subcommand("family", "dump all family members");
  add_common(c_family, o);
  CLI::App* c_iso = app.add_subcommand("iso", "isomorphism test for two members");
  add_common(c_iso, o);
  c_iso->add_option("--n1", n1_text, "RREF basis of N1 (matrix text, or 0)")->required();
  c_iso->add_option("--n2", n2_text, "RREF basis of N2 (matrix text, or 0)")->required();
  CLI::App* c_classify = app.add_subcommand("classify", "orbit classification report");
  add_common(c_classify, o);
  CLI::App* c_profile = app.add_subcommand("profile", "subgroup or quotient profiles");
  add_common(c_profile, o);
  c_profile->add_option("--kind", kind, "subgroup | quotient");
  c_profile->add_option("--gen-bound", gen_bound, "generator bound k, or 'all'");
  c_profile->add_flag("--slow", slow, "enable the order-729 brute oracle");
  CLI::App* c_verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(c_verify, o);
  c_verify->add_flag("--slow", slow, "include the slow oracle checks");

  std::vector<char*> argv;
  std::string prog = "gpe";
  argv.push_back(prog.data());
  std::vector<std::string> copy = args;
  for (auto& a : copy) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << ex.what() << '\n';
    return 2;
  }

  try {
    OutputSink sink(o.out_path, out);
    std::ostream& os = sink.stream();
    OutputFormat fmt = parse_format(o.format);
    std::vector<nlohmann::json> records;

    if (c_field->parsed()) {
      FqField field = make_field(o);
      records.push_back(provenance("field", o.p, o.e, field.modulus(), o.seed));
      records.push_back(field_record(field));
      emit_records(os, records, fmt);
      return 0;
    }

    if (c_family->parsed()) {
      FqField field = make_field(o);
      HeisenbergCtx ctx = build_heisenberg(field);
      records.push_back(provenance("family", o.p, o.e, field.modulus(), o.seed));
      for (const SubspaceFp& N : enum_codim2(field)) {
        FamilyMember m = quotient_pencil(ctx, N);
        records.push_back(family_record(m, canonical_label(ctx, N)));
      }
      emit_records(os, records, fmt);
      return 0;
    }

    if (c_iso->parsed()) {
      FqField field = make_field(o);
      HeisenbergCtx ctx = build_heisenberg(field);
      SubspaceFp n1 = subspace_from_text(o.p, o.e, n1_text);
      SubspaceFp n2 = subspace_from_text(o.p, o.e, n2_text);
      records.push_back(provenance("iso", o.p, o.e, field.modulus(), o.seed));
      IsoResult res = iso_test(ctx, n1, n2);
      nlohmann::json rec{{"type", "iso"}, {"iso", res.iso}};
      if (res.iso) {
        std::mt19937_64 rng(12345);
        rec["gamma_lambda"] = field.to_index(res.cert->gamma.lambda);
        rec["gamma_frobenius"] = res.cert->gamma.frob_k;
        rec["certificate_verified"] = verify_certificate(ctx, *res.cert, rng);
      }
      records.push_back(rec);
      emit_records(os, records, fmt);
      return 0;
    }

    if (c_classify->parsed()) {
      if (!o.modulus.empty()) {
        // classification builds its own deterministic field from the seed
        err << "classify: --modulus is not supported; use --seed\n";
        return 2;
      }
      Classification c = classify_family(o.p, o.e, o.seed, classify_guard(o));
      records.push_back(provenance("classify", o.p, o.e, c.modulus, o.seed));
      records.push_back(classification_record(c));
      emit_records(os, records, fmt);
      return 0;
    }

    if (c_profile->parsed()) {
      FqField field = make_field(o);
      records.push_back(provenance("profile", o.p, o.e, field.modulus(), o.seed));
      if (kind == "quotient") {
        HeisenbergCtx ctx = build_heisenberg(field);
        std::vector<SubspaceFp> subs = enum_codim2(field);
        ProfileReport common;
        bool first = true;
        for (const SubspaceFp& N : subs) {
          ProfileReport r = quotient_profile(ctx, quotient_pencil(ctx, N));
          if (first) {
            common = r;
            first = false;
          } else if (!(r == common)) {
            err << "profile: quotient reports differ across members\n";
            return 1;
          }
        }
        records.push_back(nlohmann::json{{"type", "quotient-profile-summary"},
                                         {"members", subs.size()},
                                         {"identical", true}});
        for (auto& rec : profile_records(common)) records.push_back(rec);
        emit_records(os, records, fmt);
        return 0;
      }
      if (kind != "subgroup") {
        err << "profile: unknown kind " << kind << '\n';
        return 2;
      }
      PolyFp a = field.modulus();
      Pencil G = Pencil::make(o.p, o.e, o.e,
                              {MatFp::identity(o.e, o.p), companion_std(a)});
      SubgroupWitness mw = eliminate(G, {o.e - 1}, {}, {});
      GenBound gb = gen_bound == "all" ? GenBound::All()
                                       : GenBound::K(std::stoi(gen_bound));
      i64 budget = slow || o.unsafe_scale ? 500000000 : 1000000;
      SmallGroup sm(mw.pencil, brute_guard(o));
      auto m_subs = enum_subgroups(sm, GenBound::All(), budget);
      StratifiedProfile strat = stratified_profile(sm, m_subs);
      ProfileReport formula = formula_profile(strat, strat.dM + 1);
      records.push_back(nlohmann::json{{"type", "profile-summary"},
                                       {"group", "B(I_e, C(a))"},
                                       {"order", ipow(o.p, 3 * o.e)},
                                       {"maximal_order", ipow(o.p, 3 * o.e - 1)},
                                       {"maximal_subgroups", m_subs.size()}});
      for (auto& rec : profile_records(formula)) records.push_back(rec);
      i64 order = ipow(o.p, 3 * o.e);
      if (order <= 243 || slow) {
        SmallGroup sg(G, brute_guard(o));
        auto g_subs = enum_subgroups(sg, gb, budget);
        ProfileReport brute = brute_profile(sg, g_subs);
        for (auto& rec : profile_records(brute)) records.push_back(rec);
        if (gb.all && !(brute.classes == formula.classes)) {
          emit_records(os, records, fmt);
          err << "profile: formula and brute-force profiles disagree\n";
          return 1;
        }
      }
      emit_records(os, records, fmt);
      return 0;
    }

    if (c_verify->parsed()) {
      VerifyOptions vo;
      vo.seed = o.seed;
      vo.slow = slow;
      vo.scale_guard = classify_guard(o);
      bool ok = verify_suite(o.p, o.e, vo, os);
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gpe
