#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monhecke/endo_algebroid.hpp"
#include "monhecke/errors.hpp"
#include "monhecke/io.hpp"
#include "monhecke/klcache.hpp"
#include "monhecke/verify.hpp"

using nlohmann::json;
using namespace monhecke;

namespace {

struct CommonOpts {
  std::string datum = "A2";
  std::string char_spec;
  int modulus = 0;
  int bound = 6;
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t seed = 20250809;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--datum", o.datum, "named root datum or JSON file path");
  cmd->add_option("--char", o.char_spec, "character spec, e.g. Z/2:1,0");
  cmd->add_option("--modulus", o.modulus, "shorthand for a Z/m sweep or target");
  cmd->add_option("--bound", o.bound, "length bound for non-finite enumerations");
  cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--cache", o.cache_dir, "KL cache directory (default $MONHECKE_CACHE)");
  cmd->add_option("--seed", o.seed, "seed for randomized suites");
}

MultLocalSystem character_of(const RootDatum& datum, const CommonOpts& o) {
  if (!o.char_spec.empty()) return parse_char_spec(datum, o.char_spec);
  if (o.modulus >= 2) return MultLocalSystem::trivial(datum, AbGroup::cyclic(o.modulus));
  return MultLocalSystem::trivial(datum, AbGroup::cyclic(2));
}

std::string cache_path_for(const CommonOpts& o, const CoxeterSystem& cox) {
  std::string dir = o.cache_dir;
  if (dir.empty()) {
    const char* env = std::getenv("MONHECKE_CACHE");
    if (env != nullptr) dir = env;
  }
  if (dir.empty()) return "";
  return dir + "/kl_" + coxeter_matrix_hash(cox.endo().coxeter_matrix) + ".txt";
}

const KLTable& kl_with_cache(EndoscopyCache& cache, const MultLocalSystem& L,
                             const CommonOpts& o) {
  const CoxeterSystem& cox = cache.coxsys(L);
  std::string path = cache_path_for(o, cox);
  if (!path.empty()) {
    if (auto loaded = read_kl_cache(path, cox)) {
      cache.set_kl(L, std::move(*loaded));
      return cache.kl(L);
    }
    const KLTable& fresh = cache.kl(L);
    write_kl_cache(path, cox, fresh);
    return fresh;
  }
  return cache.kl(L);
}

json word_json(const std::vector<int>& word) {
  json arr = json::array();
  for (int g : word) arr.push_back(g + 1);
  return arr;
}

json elt_json(const AlgebroidElt& A) {
  json terms = json::array();
  for (const auto& [w, p] : A.terms())
    terms.push_back({{"word", word_json(w.word)}, {"poly", p.str()}});
  return json{{"source", A.source().str()},
              {"target", A.target().str()},
              {"terms", terms}};
}

void emit(const json& doc, const CommonOpts& o) {
  if (o.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    // plain aligned text: one "key: value" per top-level field
    for (const auto& [k, v] : doc.items())
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

int run_datum_show(const CommonOpts& o) {
  auto datum = resolve_datum(o.datum);
  json doc;
  doc["command"] = "datum show";
  doc["datum"] = o.datum;
  doc["rank"] = datum->rank();
  doc["lattice_rank"] = datum->lattice_rank();
  doc["classification"] = gcm_type_name(datum->type());
  json gcm = json::array();
  for (const auto& row : datum->gcm().entries()) gcm.push_back(row);
  doc["gcm"] = gcm;
  json coxm = json::array();
  for (int i = 0; i < datum->rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < datum->rank(); ++j) row.push_back(datum->gcm().coxeter_m(i, j));
    coxm.push_back(row);
  }
  doc["coxeter_matrix"] = coxm;
  json roots = json::array(), coroots = json::array();
  for (int i = 0; i < datum->rank(); ++i) {
    roots.push_back(datum->simple_root(i));
    coroots.push_back(datum->simple_coroot(i));
  }
  doc["simple_roots"] = roots;
  doc["simple_coroots"] = coroots;
  if (datum->is_finite_type()) {
    doc["weyl_order"] = datum->enumerate(kUnbounded).size();
    doc["positive_roots"] = datum->positive_real_roots(kUnbounded).roots.size();
  } else {
    doc["bound"] = o.bound;
    doc["elements_within_bound"] = datum->enumerate(o.bound).size();
    doc["positive_roots_within_bound"] = datum->positive_real_roots(o.bound).roots.size();
  }
  emit(doc, o);
  return 0;
}

int run_endoscopy_compute(const CommonOpts& o) {
  auto datum = resolve_datum(o.datum);
  MultLocalSystem L = character_of(*datum, o);
  int bound = datum->is_finite_type() ? kUnbounded : o.bound;
  EndoDatum endo = endosimple_generators(*datum, L, bound);
  json doc;
  doc["command"] = "endoscopy compute";
  doc["datum"] = o.datum;
  doc["char"] = L.str();
  doc["complete"] = endo.complete;
  json phi = json::array();
  for (const auto& rr : endo.phi)
    if (rr.positive) phi.push_back(rr.coroot);
  doc["phi_coroots"] = phi;
  json gens = json::array();
  for (const auto& g : endo.gens) gens.push_back(word_json(g.refl.word));
  doc["s_endo"] = gens;
  json gcm = json::array();
  for (const auto& row : endo.endo_gcm.entries()) gcm.push_back(row);
  doc["endo_gcm"] = gcm;
  doc["coxeter_matrix"] = endo.coxeter_matrix;
  emit(doc, o);
  return 0;
}

int run_hecke(const std::string& op, const CommonOpts& o, const std::string& xw,
              const std::string& yw, const std::string& ww, const std::string& normalization,
              const std::string& form) {
  auto datum = resolve_datum(o.datum);
  MultLocalSystem L = character_of(*datum, o);
  json doc;
  doc["command"] = "hecke " + op;
  doc["datum"] = o.datum;
  doc["char"] = L.str();
  if (op == "mul") {
    WeylElt y = datum->normalize(parse_word_spec(yw, datum->rank()));
    WeylElt x = datum->normalize(parse_word_spec(xw, datum->rank()));
    AlgebroidElt B = AlgebroidElt::t_basis(y, L);
    AlgebroidElt A = AlgebroidElt::t_basis(x, B.target());
    doc["result"] = elt_json(compose(A, B));
  } else if (op == "inv") {
    WeylElt w = datum->normalize(parse_word_spec(ww, datum->rank()));
    doc["result"] = elt_json(invert_t(w, L));
  } else if (op == "bar") {
    WeylElt w = datum->normalize(parse_word_spec(ww, datum->rank()));
    doc["result"] = elt_json(bar(AlgebroidElt::t_basis(w, L)));
  } else if (op == "canonical") {
    WeylElt w = datum->normalize(parse_word_spec(ww, datum->rank()));
    EndoscopyCache cache(*datum);
    kl_with_cache(cache, L, o);
    bool geometric = normalization == "geom";
    doc["normalization"] = geometric ? "geom" : "c";
    doc["result"] = elt_json(canonical_basis(cache, w, L, geometric));
  } else if (op == "bs-decompose") {
    EndoscopyCache cache(*datum);
    kl_with_cache(cache, L, o);
    auto dec = bs_decompose(cache, parse_word_spec(ww, datum->rank()), L);
    json terms = json::array();
    for (const auto& [w, p] : dec)
      terms.push_back({{"word", word_json(w.word)}, {"poly", p.str()}});
    doc["multiplicities"] = terms;
  } else if (op == "pair") {
    FormWeight weight = (form == "wlen") ? FormWeight::WLen : FormWeight::Flat;
    doc["form"] = (weight == FormWeight::WLen) ? "wlen" : "flat";
    doc["result"] = hom_pairing(parse_word_spec(xw, datum->rank()),
                                parse_word_spec(yw, datum->rank()), L, weight)
                        .str();
  }
  emit(doc, o);
  return 0;
}

int run_theta_check(const CommonOpts& o) {
  VerifyOptions vo;
  vo.datum = o.datum;
  if (!o.char_spec.empty()) vo.char_spec = o.char_spec;
  vo.seed = o.seed;
  SuiteReport report = run_suite("theta", vo);
  json doc;
  doc["command"] = "endo theta-check";
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  doc["checks"] = checks;
  doc["pass"] = report.all_pass();
  emit(doc, o);
  return report.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in monodromic Hecke algebroids"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string xw = "e", yw = "e", ww = "e";
  std::string normalization = "c";
  std::string form = "flat";
  std::string suite = "all";

  CLI::App* datum_cmd = app.add_subcommand("datum", "root datum inspection");
  CLI::App* datum_show = datum_cmd->add_subcommand("show", "summarize a root datum");
  add_common(datum_show, opts);

  CLI::App* endoscopy_cmd = app.add_subcommand("endoscopy", "endoscopic Weyl group data");
  CLI::App* endoscopy_compute =
      endoscopy_cmd->add_subcommand("compute", "compute Phi_L, S_L°, endoscopic GCM");
  add_common(endoscopy_compute, opts);

  CLI::App* hecke_cmd = app.add_subcommand("hecke", "monodromic Hecke algebroid operations");
  CLI::App* hecke_mul = hecke_cmd->add_subcommand("mul", "compose T_x o T_y");
  CLI::App* hecke_inv = hecke_cmd->add_subcommand("inv", "invert T_w");
  CLI::App* hecke_bar = hecke_cmd->add_subcommand("bar", "bar involution of T_w");
  CLI::App* hecke_canonical = hecke_cmd->add_subcommand("canonical", "canonical basis element");
  CLI::App* hecke_bsd = hecke_cmd->add_subcommand("bs-decompose", "Bott-Samelson multiplicities");
  CLI::App* hecke_pair = hecke_cmd->add_subcommand("pair", "standard-form pairing of BS elements");
  for (CLI::App* c : {hecke_mul, hecke_inv, hecke_bar, hecke_canonical, hecke_bsd, hecke_pair})
    add_common(c, opts);
  hecke_mul->add_option("--x", xw, "left word, 1-based letters");
  hecke_mul->add_option("--y", yw, "right word");
  hecke_inv->add_option("--w", ww, "word to invert");
  hecke_bar->add_option("--w", ww, "word");
  hecke_canonical->add_option("--w", ww, "word");
  hecke_canonical->add_option("--normalization", normalization, "c|geom")
      ->check(CLI::IsMember({"c", "geom"}));
  hecke_bsd->add_option("--word", ww, "expression to decompose");
  hecke_pair->add_option("--x", xw, "first expression");
  hecke_pair->add_option("--y", yw, "second expression");
  hecke_pair->add_option("--form", form, "flat|wlen")->check(CLI::IsMember({"flat", "wlen"}));

  CLI::App* endo_cmd = app.add_subcommand("endo", "endoscopic algebroid");
  CLI::App* endo_theta = endo_cmd->add_subcommand("theta-check", "verify theta on full tables");
  add_common(endo_theta, opts);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  add_common(verify_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // A verify suite only restricts its sweep when the flag was actually given.
  bool datum_set = verify_cmd->count("--datum") > 0;
  bool char_set = verify_cmd->count("--char") > 0;
  bool modulus_set = verify_cmd->count("--modulus") > 0;
  bool bound_set = verify_cmd->count("--bound") > 0;
  bool seed_set = verify_cmd->count("--seed") > 0;

  try {
    if (datum_show->parsed()) return run_datum_show(opts);
    if (endoscopy_compute->parsed()) return run_endoscopy_compute(opts);
    if (hecke_mul->parsed()) return run_hecke("mul", opts, xw, yw, ww, normalization, form);
    if (hecke_inv->parsed()) return run_hecke("inv", opts, xw, yw, ww, normalization, form);
    if (hecke_bar->parsed()) return run_hecke("bar", opts, xw, yw, ww, normalization, form);
    if (hecke_canonical->parsed())
      return run_hecke("canonical", opts, xw, yw, ww, normalization, form);
    if (hecke_bsd->parsed())
      return run_hecke("bs-decompose", opts, xw, yw, ww, normalization, form);
    if (hecke_pair->parsed()) return run_hecke("pair", opts, xw, yw, ww, normalization, form);
    if (endo_theta->parsed()) return run_theta_check(opts);
    if (verify_cmd->parsed()) {
      VerifyOptions vo;
      if (datum_set) vo.datum = opts.datum;
      if (char_set) vo.char_spec = opts.char_spec;
      if (modulus_set) vo.modulus = opts.modulus;
      if (bound_set) vo.bound = opts.bound;
      if (seed_set) vo.seed = opts.seed;
      SuiteReport report = run_suite(suite, vo);
      json doc;
      doc["command"] = "verify " + suite;
      json checks = json::array();
      for (const auto& c : report.checks)
        checks.push_back(
            {{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
      doc["checks"] = checks;
      doc["pass"] = report.all_pass();
      emit(doc, opts);
      return report.all_pass() ? 0 : 3;
    }
  } catch (const MhError& e) {
    std::cerr << err_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == Err::Internal ? 4 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
