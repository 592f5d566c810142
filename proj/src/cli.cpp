#include "zsurf/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "zsurf/classify.hpp"
#include "zsurf/homology.hpp"
#include "zsurf/random_words.hpp"
#include "zsurf/textio.hpp"

namespace zsurf {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

std::string render_checks(const std::vector<std::pair<std::string, bool>>& checks) {
  std::ostringstream out;
  for (const auto& [name, ok] : checks) out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  return out.str();
}

Json checks_to_json(const std::vector<std::pair<std::string, bool>>& checks) {
  Json arr = Json::array();
  for (const auto& [name, ok] : checks) arr.push_back(Json{{"name", name}, {"pass", ok}});
  return arr;
}

std::string quad_to_text(const QuadElem& q) {
  std::ostringstream out;
  out << q.a.get_str();
  if (q.b != 0) {
    out << (q.b > 0 ? " + " : " - ");
    Rat b = abs(q.b);
    if (b != 1) out << b.get_str() << "*";
    out << "t";
  }
  return out.str();
}

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int cmd_units_classify(long n, const Options& opt, std::ostream& out) {
  UnitGroupClass c = classify_unit_group(n);
  if (opt.json())
    out << Json{{"n", n}, {"classification", to_string(c)}}.dump(2) << "\n";
  else
    out << "n=" << n << " classification=" << to_string(c) << "\n";
  return kExitOk;
}

int cmd_units_list(long n, const UnitSearchBounds& bounds, const Options& opt,
                   std::ostream& out) {
  UnitGroupReport rep = enumerate_unit_classes(n, bounds);
  if (opt.json()) {
    Json reps = Json::array();
    for (const auto& r : rep.representatives) reps.push_back(quad_to_text(r));
    Json j{{"n", rep.n},
           {"classification", to_string(rep.classification)},
           {"representatives", reps},
           {"bound_exhausted", rep.bound_exhausted},
           {"table_disagrees", rep.table_disagrees}};
    if (rep.witness) j["witness"] = quad_to_text(*rep.witness);
    out << j.dump(2) << "\n";
  } else {
    out << "n=" << rep.n << " classification=" << to_string(rep.classification)
        << " representatives=[";
    for (size_t i = 0; i < rep.representatives.size(); ++i)
      out << (i ? "; " : "") << quad_to_text(rep.representatives[i]);
    out << "]\n";
    if (rep.witness) out << "witness=" << quad_to_text(*rep.witness) << "\n";
    if (rep.bound_exhausted) out << "note: bounded search did not close; raise the bounds\n";
    if (rep.table_disagrees) out << "WARNING: multiplication table disagrees with closed form\n";
  }
  return rep.table_disagrees ? kExitCheckFailed : kExitOk;
}

int cmd_forms_standard(int cpos, int cneg, int genus, const Options& opt, std::ostream& out) {
  HermMatrix m = standard_form(cpos, cneg, genus);
  if (opt.json()) {
    out << matrix_to_json(m.entries()).dump(2) << "\n";
  } else {
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) out << (j ? " | " : "") << poly_to_text(m.at(i, j));
      out << "\n";
    }
    if (m.size() == 0) out << "(empty 0x0 matrix)\n";
  }
  return kExitOk;
}

int cmd_forms_check_unknotting(const std::string& path, int cpos, int cneg, int entry_bound,
                               const Options& opt, std::ostream& out) {
  HermMatrix a = herm_from_json(load_json_file(path));
  UnknottingCheck rep = check_unknotting_condition(a, cpos, cneg, entry_bound);
  if (opt.json()) {
    Json j{{"checks", checks_to_json(rep.checks)}, {"all_pass", rep.all_pass()}};
    if (rep.congruence.kind == CongruenceResult::Kind::Witness)
      j["witness"] = intmat_to_json(rep.congruence.witness);
    else if (rep.congruence.kind == CongruenceResult::Kind::RefutedByInvariant)
      j["refuted_by"] = rep.congruence.obstruction;
    else
      j["congruence"] = "no witness within bound";
    out << j.dump(2) << "\n";
  } else {
    out << render_checks(rep.checks);
    if (rep.congruence.kind == CongruenceResult::Kind::RefutedByInvariant)
      out << "congruence refuted by invariant: " << rep.congruence.obstruction << "\n";
    else if (rep.congruence.kind == CongruenceResult::Kind::NoWitnessWithinBound)
      out << "no congruence witness within bound (not a proof of non-congruence)\n";
  }
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_forms_factor_z(const std::string& path, const Options& opt, std::ostream& out) {
  HermMatrix b = herm_from_json(load_json_file(path));
  FactorZResult r = factor_out_z(b);
  if (!r.quotient) {
    if (opt.json())
      out << Json{{"divisible", false}, {"row", r.bad_row + 1}, {"col", r.bad_col + 1}}.dump(2)
          << "\n";
    else
      out << "not divisible by z at entry (" << r.bad_row + 1 << ", " << r.bad_col + 1 << ")\n";
    return kExitCheckFailed;
  }
  if (opt.json()) {
    Json j = matrix_to_json(r.quotient->entries());
    j["divisible"] = true;
    out << j.dump(2) << "\n";
  } else {
    for (int i = 0; i < r.quotient->size(); ++i) {
      for (int j = 0; j < r.quotient->size(); ++j)
        out << (j ? " | " : "") << poly_to_text(r.quotient->at(i, j));
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_isometry_decompose(const std::string& path, int cpos, int cneg, int genus,
                           const std::string& mode, const Options& opt, std::ostream& out) {
  StdModuleContext ctx{cpos, cneg, genus};
  IntMat m = intmat_from_json(load_json_file(path));
  std::string err = isometry_violation(ctx, m);
  if (!err.empty()) throw std::invalid_argument("matrix is not an isometry: " + err);
  IsometryMatrix f(ctx, m);

  if (mode == "general") {
    Decomposition d = decompose(f);
    if (opt.json()) {
      out << Json{{"word", word_to_text(d.word)}, {"orthogonal", intmat_to_json(d.n.n)}}.dump(2)
          << "\n";
    } else {
      out << "word:\n" << word_to_text(d.word) << "orthogonal N:\n";
      out << intmat_to_json(d.n.n).dump() << "\n";
    }
    return kExitOk;
  }
  DefiniteDecomposition d = mode == "definite" ? decompose_definite(f) : decompose_11(f);
  if (opt.json()) {
    out << Json{{"word", word_to_text(d.word)},
                {"signed_perm_word", word_to_text(d.signed_perm_word)}}
               .dump(2)
        << "\n";
  } else {
    out << "word:\n" << word_to_text(d.word);
    out << "signed permutation word:\n" << word_to_text(d.signed_perm_word);
  }
  return kExitOk;
}

int cmd_isometry_random_word(uint64_t seed, int length, int cpos, int cneg, int genus,
                             const Options& opt, std::ostream& out) {
  StdModuleContext ctx{cpos, cneg, genus};
  Rng rng(seed);
  Word w = random_realized_word(rng, ctx, length);
  IsometryMatrix m = eval_word(w, ctx);
  if (opt.json())
    out << Json{{"word", word_to_text(w)}, {"matrix", intmat_to_json(m.matrix())}}.dump(2)
        << "\n";
  else
    out << word_to_text(w) << "matrix: " << intmat_to_json(m.matrix()).dump() << "\n";
  return kExitOk;
}

int cmd_isometry_enum_orthogonal(int cpos, int cneg, int height, const Options& opt,
                                 std::ostream& out) {
  std::vector<IntOrthogonal> all = enumerate_orthogonal(cpos, cneg, height);
  if (opt.json()) {
    Json arr = Json::array();
    for (const auto& n : all) arr.push_back(intmat_to_json(n.n));
    out << Json{{"count", all.size()}, {"elements", arr}}.dump(2) << "\n";
  } else {
    out << "count=" << all.size() << "\n";
    for (const auto& n : all) out << intmat_to_json(n.n).dump() << "\n";
  }
  return kExitOk;
}

int cmd_homology_present(int genus, int cpos, int cneg, const Options& opt, std::ostream& out) {
  H1Presentation p = h1_presentation(genus, cpos, cneg);
  if (opt.json()) {
    Json gens = Json::array();
    for (const auto& g : p.presentation.generators) gens.push_back(g);
    Json blocks = Json::array();
    for (const auto& b : p.certificate.blocks)
      blocks.push_back(Json{{"sign", b.sign},
                            {"chain_condition", b.chain_condition},
                            {"kernel_generators_verified", b.kernel_generators_verified},
                            {"sign_relation_detected", b.sign_relation_detected},
                            {"block_presentation_verified", b.block_presentation_verified}});
    out << Json{{"generators", gens},
                {"relations", matrix_to_json(p.presentation.relations)},
                {"certificate", Json{{"blocks", blocks}, {"verified", p.certificate.all_verified()}}}}
               .dump(2)
        << "\n";
  } else {
    out << "generators:";
    for (const auto& g : p.presentation.generators) out << " " << g;
    out << "\nrelations:\n";
    for (size_t i = 0; i < p.presentation.relations.size(); ++i) {
      for (size_t j = 0; j < p.presentation.relations[i].size(); ++j)
        out << (j ? " | " : "") << poly_to_text(p.presentation.relations[i][j]);
      out << "\n";
    }
    out << "certificate verified: " << (p.certificate.all_verified() ? "yes" : "NO") << "\n";
  }
  return p.certificate.all_verified() ? kExitOk : kExitCheckFailed;
}

int cmd_homology_invariants(int genus, int cpos, int cneg, const std::string& delta_text,
                            const Options& opt, std::ostream& out) {
  if (!delta_text.empty()) {
    LaurentPoly delta = poly_from_text(delta_text);
    PkModuleReport rep = pk_module_ranks(genus, cpos, cneg, delta);
    if (opt.json())
      out << Json{{"untwisted_h1_rank", rep.untwisted_h1_rank},
                  {"twisted_order", poly_to_text(rep.twisted_order)},
                  {"delta_coprime_to_t_minus_one", rep.delta_coprime_to_t_minus_one}}
                 .dump(2)
          << "\n";
    else
      out << "untwisted_h1_rank=" << rep.untwisted_h1_rank
          << " twisted_order=" << poly_to_text(rep.twisted_order)
          << " coprime=" << (rep.delta_coprime_to_t_minus_one ? "true" : "false") << "\n";
    return kExitOk;
  }
  InvariantReport rep = invariants(h1_presentation(genus, cpos, cneg).presentation);
  if (opt.json())
    out << Json{{"order", poly_to_text(rep.order)},
                {"rank_at_one", rep.rank_at_one},
                {"untwisted_h1_rank", rep.untwisted_h1_rank},
                {"filtration", Json::array({rep.filtration[0], rep.filtration[1]})}}
               .dump(2)
        << "\n";
  else
    out << "order=" << poly_to_text(rep.order) << " rank_at_one=" << rep.rank_at_one
        << " untwisted_h1_rank=" << rep.untwisted_h1_rank << " filtration=["
        << rep.filtration[0] << ", " << rep.filtration[1] << "]\n";
  return kExitOk;
}

int cmd_classify_disks(long n, const std::string& sign, bool presentable, const Options& opt,
                       std::ostream& out) {
  if (sign != "+" && sign != "-") throw std::invalid_argument("--sign must be + or -");
  DiskCount d = disk_count(n, sign == "+" ? 1 : -1, presentable);
  std::string kind = d.kind == DiskCountKind::Zero
                         ? "Zero"
                         : (d.kind == DiskCountKind::Infinite ? "Infinite" : "Finite");
  if (opt.json()) {
    Json j{{"n", n}, {"kind", kind}};
    if (d.kind == DiskCountKind::Finite) j["count"] = d.count;
    out << j.dump(2) << "\n";
  } else {
    if (d.kind == DiskCountKind::Finite)
      out << "count " << d.count << "\n";
    else
      out << kind << "\n";
  }
  return kExitOk;
}

int cmd_classify_surfaces(int cpos, int cneg, int genus, bool standard, const Options& opt,
                          std::ostream& out) {
  SurfaceCountResult r = surface_count(cpos, cneg, genus, standard);
  std::string kind = r.kind == SurfaceCountResult::Kind::Exact
                         ? "Exact"
                         : (r.kind == SurfaceCountResult::Kind::UpperBound ? "UpperBound"
                                                                           : "Unknown");
  if (opt.json()) {
    Json j{{"kind", kind}, {"rationale", r.rationale}};
    if (r.kind != SurfaceCountResult::Kind::Unknown) j["count"] = r.count;
    out << j.dump(2) << "\n";
  } else {
    out << kind;
    if (r.kind != SurfaceCountResult::Kind::Unknown) out << " " << r.count;
    out << "  (" << r.rationale << ")\n";
  }
  return kExitOk;
}

int cmd_classify_quotient(long k_bound, const Options& opt, std::ostream& out) {
  long q = quotient_size_1_0(k_bound);
  if (opt.json())
    out << Json{{"quotient_size", q}}.dump(2) << "\n";
  else
    out << q << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact algebra for immersed Z-surfaces: linking forms, isometries, unit groups"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // units
  auto* units = app.add_subcommand("units", "unitary unit groups U(Delta_n)/{t^k}");
  units->require_subcommand(1);
  long n = 0;
  auto* uc = units->add_subcommand("classify", "closed-form classification");
  uc->add_option("--n", n, "twist parameter")->required();
  auto* ul = units->add_subcommand("list", "bounded enumeration of unit classes");
  UnitSearchBounds bounds;
  ul->add_option("--n", n, "twist parameter")->required();
  ul->add_option("--num-bound", bounds.numerator_bound, "numerator bound");
  ul->add_option("--denom-power", bounds.denom_power_bound, "denominator power bound");
  ul->add_option("--k-bound", bounds.k_bound, "t-power bound for class partitioning");

  // forms
  auto* forms = app.add_subcommand("forms", "hermitian matrices over the Laurent ring");
  forms->require_subcommand(1);
  int cpos = 0, cneg = 0, genus = 0, entry_bound = 3;
  std::string matrix_path;
  auto* fs = forms->add_subcommand("standard", "the standard form");
  fs->add_option("--cpos", cpos)->required();
  fs->add_option("--cneg", cneg)->required();
  fs->add_option("--genus", genus)->required();
  auto* fc = forms->add_subcommand("check-unknotting", "crossing-change condition on A");
  fc->add_option("--matrix", matrix_path)->required();
  fc->add_option("--cpos", cpos)->required();
  fc->add_option("--cneg", cneg)->required();
  fc->add_option("--entry-bound", entry_bound);
  auto* fz = forms->add_subcommand("factor-z", "entrywise division by z");
  fz->add_option("--matrix", matrix_path)->required();

  // isometry
  auto* iso = app.add_subcommand("isometry", "automorphisms of the standard boundary module");
  iso->require_subcommand(1);
  std::string mode = "general";
  uint64_t seed = 0;
  int length = 0, height = 1;
  auto* id = iso->add_subcommand("decompose", "factor an isometry into generators");
  id->add_option("--matrix", matrix_path)->required();
  id->add_option("--cpos", cpos)->required();
  id->add_option("--cneg", cneg)->required();
  id->add_option("--genus", genus)->required();
  id->add_option("--mode", mode)->check(CLI::IsMember({"general", "definite", "oneone"}));
  auto* ir = iso->add_subcommand("random-word", "seeded random word of realized generators");
  ir->add_option("--seed", seed)->required();
  ir->add_option("--length", length)->required();
  ir->add_option("--cpos", cpos)->required();
  ir->add_option("--cneg", cneg)->required();
  ir->add_option("--genus", genus)->required();
  auto* ie = iso->add_subcommand("enum-orthogonal", "O(c+,c-;Z) up to an entry height");
  ie->add_option("--cpos", cpos)->required();
  ie->add_option("--cneg", cneg)->required();
  ie->add_option("--height", height)->required();

  // homology
  auto* hom = app.add_subcommand("homology", "twisted homology of the plumbed manifold");
  hom->require_subcommand(1);
  std::string delta_text;
  auto* hp = hom->add_subcommand("present", "presentation of H_1 with Z[t^{+-1}] coefficients");
  hp->add_option("--genus", genus)->required();
  hp->add_option("--cpos", cpos)->required();
  hp->add_option("--cneg", cneg)->required();
  auto* hi = hom->add_subcommand("invariants", "order, ranks and filtration");
  hi->add_option("--genus", genus)->required();
  hi->add_option("--cpos", cpos)->required();
  hi->add_option("--cneg", cneg)->required();
  hi->add_option("--delta", delta_text, "Alexander polynomial of the knot piece");

  // classify
  auto* cls = app.add_subcommand("classify", "classification reports");
  cls->require_subcommand(1);
  std::string sign = "+";
  bool presentable = true, standard = false;
  long k_bound = 5;
  auto* cd = cls->add_subcommand("disks", "disk counts for twist knots");
  cd->add_option("--n", n)->required();
  cd->add_option("--sign", sign)->required();
  cd->add_option("--presentable", presentable);
  auto* cs = cls->add_subcommand("surfaces", "surface-count bounds");
  cs->add_option("--cpos", cpos)->required();
  cs->add_option("--cneg", cneg)->required();
  cs->add_option("--genus", genus)->required();
  cs->add_flag("--standard", standard);
  auto* cq = cls->add_subcommand("quotient-10", "boundary automorphism quotient for (1,0)");
  cq->add_option("--k-bound", k_bound);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (uc->parsed()) return cmd_units_classify(n, opt, out);
    if (ul->parsed()) return cmd_units_list(n, bounds, opt, out);
    if (fs->parsed()) return cmd_forms_standard(cpos, cneg, genus, opt, out);
    if (fc->parsed())
      return cmd_forms_check_unknotting(matrix_path, cpos, cneg, entry_bound, opt, out);
    if (fz->parsed()) return cmd_forms_factor_z(matrix_path, opt, out);
    if (id->parsed()) {
      std::string m = mode == "oneone" ? "oneone" : mode;
      return cmd_isometry_decompose(matrix_path, cpos, cneg, genus, m, opt, out);
    }
    if (ir->parsed()) return cmd_isometry_random_word(seed, length, cpos, cneg, genus, opt, out);
    if (ie->parsed()) return cmd_isometry_enum_orthogonal(cpos, cneg, height, opt, out);
    if (hp->parsed()) return cmd_homology_present(genus, cpos, cneg, opt, out);
    if (hi->parsed()) return cmd_homology_invariants(genus, cpos, cneg, delta_text, opt, out);
    if (cd->parsed()) return cmd_classify_disks(n, sign, presentable, opt, out);
    if (cs->parsed()) return cmd_classify_surfaces(cpos, cneg, genus, standard, opt, out);
    if (cq->parsed()) return cmd_classify_quotient(k_bound, opt, out);
    err << "error: no subcommand\n";
    return kExitBadInput;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace zsurf
