// hopfkit command-line front end.
//
// Exit codes: 0 success, 1 a selected check failed, 2 bad parameters,
// 3 certification failure, 4 parse failure, 5 group-likes unavailable.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/builders.hpp"
#include "hopfkit/datum.hpp"
#include "hopfkit/doubles.hpp"
#include "hopfkit/pipelines.hpp"
#include "hopfkit/presented.hpp"
#include "hopfkit/quasitri.hpp"
#include "hopfkit/serialize.hpp"
#include "hopfkit/version.hpp"

namespace fs = std::filesystem;
using namespace hopfkit;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadParameters = 2, kCertification = 3, kParse = 4, kNoGroupLikes = 5 };

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadParameters:
    case ErrorKind::TooLarge:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::AmbientMismatch:
    case ErrorKind::LabelResolution:
    case ErrorKind::NotGroupLike:
    case ErrorKind::NotCentral:
      return kBadParameters;
    case ErrorKind::AxiomFailure:
    case ErrorKind::NotRMatrix:
    case ErrorKind::ConventionFailure:
    case ErrorKind::IdealMismatch:
    case ErrorKind::SingularMonodromy:
    case ErrorKind::IllPosed:
      return kCertification;
    case ErrorKind::Syntax:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::ConductorMismatch:
    case ErrorKind::Io:
    case ErrorKind::IncompleteInput:
    case ErrorKind::StepLimit:
    case ErrorKind::EscapesBasis:
    case ErrorKind::Nonterminating:
      return kParse;
    default:
      return kCheckFailed;
  }
}

// Raised inside commands to leave with a specific code after printing a message.
struct ExitRequest {
  int code;
  std::string message;
};

struct Globals {
  std::string mode = "auto";
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
  bool json = false;
  std::size_t samples = 32;
  bool allow_large = false;

  VerifyOptions verify() const {
    VerifyOptions o;
    o.mode = parse_mode(mode);
    o.seed = seed;
    o.samples = samples;
    o.allow_large = allow_large;
    return o;
  }
};

std::string digest(const std::string& path) {
  const std::string bytes = detail::read_file(path);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

// Collects the reports and values of one invocation; rendered once at the end.
class Output {
 public:
  Output(std::string command, const Globals& g) : command_(std::move(command)), g_(g) {}

  void input(const std::string& path) { inputs_.emplace_back(path, digest(path)); }
  void report(const Report& r) { reports_.push_back(r); }
  void value(const std::string& key, const json& v, const std::string& text) {
    values_[key] = v;
    lines_.push_back(key + ": " + text);
  }
  void value(const std::string& key, const std::string& v) { value(key, json(v), v); }
  bool ok() const {
    for (const auto& r : reports_)
      if (!r.ok()) return false;
    return true;
  }

  void print() const {
    if (g_.json) {
      json j;
      j["tool"] = std::string("hopfkit ") + kVersion;
      j["command"] = command_;
      j["mode"] = g_.mode;
      j["seed"] = g_.seed;
      j["inputs"] = json::array();
      for (const auto& [p, d] : inputs_) j["inputs"].push_back({{"path", p}, {"digest", d}});
      j["values"] = values_;
      j["reports"] = json::array();
      for (const auto& r : reports_) j["reports"].push_back(r.to_json());
      j["ok"] = ok();
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "hopfkit " << kVersion << "  " << command_ << "  mode=" << g_.mode << " seed=" << g_.seed << "\n";
    for (const auto& [p, d] : inputs_) std::cout << "input " << p << "  " << d << "\n";
    for (const auto& l : lines_) std::cout << l << "\n";
    for (const auto& r : reports_) std::cout << r.to_text();
  }

 private:
  std::string command_;
  const Globals& g_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  json values_ = json::object();
  std::vector<std::string> lines_;
  std::vector<Report> reports_;
};

// "c*label + ..." with at most `limit` terms shown.
std::string show(const HopfAlgebra& H, const Element& x, std::size_t limit = 12) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [k, c] : x.terms) {
    if (n == limit) {
      os << " + ... (" << x.terms.size() << " terms)";
      break;
    }
    os << (n ? " + " : "") << "(" << c.embed(H.conductor).to_string() << ")*" << H.labels.at(leg(k, 0));
    ++n;
  }
  return os.str();
}

json element_json(const HopfAlgebra& H, const Element& x) {
  json a = json::array();
  for (const auto& [k, c] : x.terms) a.push_back({leg(k, 0), c.embed(H.conductor).to_string()});
  return a;
}

std::string ext(const std::string& path) { return fs::path(path).extension().string(); }

// With require = false an uncertified algebra is returned and the failing report recorded.
HopfAlgebra load_certified(const std::string& path, const Globals& g, Output& out, bool require = true) {
  out.input(path);
  HopfAlgebra H = load_hopf(path);
  Report r("hopf-axioms: " + (H.name.empty() ? path : H.name));
  r.merge(certify(H, g.verify()));
  out.report(r);
  if (require && !H.certified) throw ExitRequest{kCertification, path + " does not satisfy the Hopf axioms"};
  return H;
}

// An algebra and, when the input is an .rmat, its R-matrix.
struct Loaded {
  HopfAlgebra H;
  std::optional<Element> R;
};

Loaded load_input(const std::string& path, const Globals& g, Output& out, bool require = true) {
  Loaded L;
  if (ext(path) == ".rmat") {
    out.input(path);
    const std::string text = detail::read_file(path);
    fs::path ref(rmat_ambient(text));
    if (ref.is_relative()) ref = fs::path(path).parent_path() / ref;
    L.H = load_certified(ref.string(), g, out, require);
    L.R = parse_rmat(text, L.H).R;
  } else {
    L.H = load_certified(path, g, out, require);
  }
  return L;
}

void save_outputs(const HopfAlgebra& H, const std::string& hopf_path, const Element* R, const std::string& rmat_path,
                  Output& out) {
  save_hopf(hopf_path, H);
  out.value("wrote", hopf_path + " (dim " + std::to_string(H.dim()) + ")");
  if (R && !rmat_path.empty()) {
    fs::path base = fs::path(rmat_path).parent_path();
    std::string ref = fs::relative(fs::absolute(hopf_path), fs::absolute(base.empty() ? "." : base)).generic_string();
    detail::write_file(rmat_path, write_rmat(ref, H, *R));
    out.value("wrote_rmat", rmat_path);
  }
}

// Resolves "label", "a*b*c" (group-like or basis labels) or a JSON sparse element.
Element resolve_element(const HopfAlgebra& H, const std::string& spec) {
  auto ops = exact_ops(H);
  if (!spec.empty() && spec.front() == '[') {
    json j;
    try {
      j = json::parse(spec);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Syntax, "element '" + spec + "': " + e.what());
    }
    return to_element({spec, detail::sparse_at(j, H.dim(), H.conductor, "element")});
  }
  for (const auto& g : H.grouplikes)
    if (g.label == spec) return to_element(g);
  for (std::uint32_t i = 0; i < H.dim(); ++i)
    if (H.labels[i] == spec) return ops.basis(i);
  auto star = spec.find('*');
  if (star != std::string::npos) {
    // Try every split so labels that contain '*' still resolve.
    for (std::size_t p = star; p != std::string::npos; p = spec.find('*', p + 1)) {
      try {
        return ops.mul(resolve_element(H, spec.substr(0, p)), resolve_element(H, spec.substr(p + 1)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::LabelResolution) throw;
      }
    }
  }
  throw Error(ErrorKind::LabelResolution, "no group-like or basis label '" + spec + "' in " + H.name);
}

// Group-likes for the KR search: a complete enumeration when available, else the
// closure of the metadata.
struct GroupLikeSource {
  std::vector<NamedElement> elements;
  bool complete = false;
  std::string how;
};

GroupLikeSource group_likes_for(const HopfAlgebra& H, std::uint32_t enumerate_limit) {
  GroupLikeSource src;
  std::optional<GroupLikeGroup> closure;
  if (!H.grouplikes.empty()) closure = group_like_closure(H, H.grouplikes);
  if (H.dim() <= enumerate_limit) {
    auto gl = find_group_likes(H);
    if (gl.complete) {
      auto ops = exact_ops(H);
      for (std::size_t i = 0; i < gl.elements.size(); ++i) {
        std::string label = "l" + std::to_string(i);
        if (closure)
          for (std::size_t c = 0; c < closure->order(); ++c)
            if (ops.equal(closure->elements[c], gl.elements[i])) label = closure->labels[c];
        src.elements.push_back(to_named(label, gl.elements[i]));
      }
      src.complete = true;
      src.how = "complete enumeration, |G| = " + std::to_string(gl.elements.size());
      return src;
    }
    src.how = "enumeration incomplete (" + gl.detail + ")";
  } else {
    src.how = "enumeration skipped above dim " + std::to_string(enumerate_limit);
  }
  if (!closure) throw ExitRequest{kNoGroupLikes, "no group-like metadata and " + src.how};
  for (std::size_t c = 0; c < closure->order(); ++c) src.elements.push_back(to_named(closure->labels[c], closure->elements[c]));
  src.how += "; closure of metadata, order " + std::to_string(closure->order()) + " (lower bound)";
  return src;
}

RMatrix verified_r(const HopfAlgebra& H, const Element& R, const Globals& g, Output& out) {
  RMatrix rm = verify_quasitriangular(H, R, g.verify());
  Report named("quasitriangular");
  named.merge(rm.report);
  out.report(named);
  return rm;
}

Backend factorizable_backend(const HopfAlgebra& H, const Globals& g) {
  Mode m = parse_mode(g.mode);
  if (m == Mode::Exact) return Backend::Exact;
  if (m == Mode::Auto) return H.dim() <= 200 ? Backend::Exact : Backend::Modular;
  return Backend::Modular;
}

void run_factorizable(const HopfAlgebra& H, RMatrix& R, const Globals& g, Output& out) {
  Report rep("factorizable");
  Stopwatch sw;
  auto backend = factorizable_backend(H, g);
  auto fr = is_factorizable(H, R, backend, g.seed);
  Check& c = rep.add("monodromy_full_rank", fr.factorizable,
                     "rank " + std::to_string(fr.rank) + "/" + std::to_string(H.dim()), fr.certificate);
  c.seconds = sw.seconds();
  if (fr.certificate.find("modular") != std::string::npos)
    rep.note("modular certificate: full rank mod a prime implies full rank over the cyclotomic field");
  out.report(rep);
}

void run_ribbon(const HopfAlgebra& H, RMatrix& R, Output& out, std::uint32_t enumerate_limit) {
  GroupLikeSource src = group_likes_for(H, enumerate_limit);
  out.value("grouplikes", src.how);
  RibbonCertificate cert = drinfeld_element(H, R);
  kr_ribbon_search(H, R, cert, src.elements, src.complete);
  Report rep("ribbon");
  rep.merge(cert.report);
  out.value("drinfeld_convention", leg_convention_name(cert.convention));
  out.value("u", element_json(H, cert.u), show(H, cert.u));
  out.value("g", element_json(H, cert.g), show(H, cert.g));
  json adm = json::array();
  std::string text;
  for (std::size_t i = 0; i < cert.admissible.size(); ++i) {
    const Element l = to_element(cert.admissible[i]);
    adm.push_back({{"l", cert.admissible[i].label}, {"l_terms", element_json(H, l)}, {"v", element_json(H, cert.ribbons[i])}});
    text += "\n  l = " + cert.admissible[i].label + " = " + show(H, l) + "\n    v = u l = " + show(H, cert.ribbons[i]);
  }
  out.value("admissible", adm, std::to_string(cert.admissible.size()) + (cert.unique ? " (unique)" : "") + text);
  json tj = json::array();
  for (const auto& t : ribbon_templates(H, R, cert, src.elements, src.complete)) {
    std::string status = status_name(t.status);
    tj.push_back({{"template", t.name}, {"hypotheses", status}, {"detail", t.detail}, {"predicts", t.predicted_form},
                  {"prediction_holds", t.prediction_holds}});
    std::string line = std::string("hypotheses ") + (t.status == Status::Pass ? "satisfied" : t.status == Status::Fail ? "not satisfied" : "unverifiable") +
                       " (" + t.detail + ")";
    if (t.predicted) line += ", predicts v = " + t.predicted_form + (t.prediction_holds ? " [confirmed]" : " [NOT confirmed]");
    out.value("template." + t.name, tj.back(), line);
    if (t.status == Status::Pass) rep.add("template." + t.name, t.prediction_holds, t.predicted_form);
  }
  out.report(rep);
}

// Checker selection by file shape: n selects the determinant criteria, f (or no
// Cartan matrix) the reduced-datum criteria, a bare Cartan datum the double-quotient
// hypotheses. A missing f is solved from chi_i(f_j) = chi_j(g_i).
void analyze_datum(const std::string& path, Output& out) {
  out.input(path);
  DatumFile D = load_datum(path);
  if (D.cartan && !D.f && !D.n) {
    out.value("checker", "double-quotient hypotheses (Cartan datum)");
    out.report(double_quotient_hypotheses(D.cartan_datum()));
  } else {
    ReducedDatum rd = D.reduced_datum();
    if (!D.f) {
      if (auto f = solve_reduced_f(D.group_orders, D.g, D.chi)) {
        rd.f = *f;
        out.value("f", json(*f), "solved from chi_i(f_j) = chi_j(g_i): " + json(*f).dump());
      } else {
        out.value("f", json(nullptr), "no f solves chi_i(f_j) = chi_j(g_i)");
      }
    }
    if (D.n) {
      out.value("checker", "determinant criteria over Z_" + std::to_string(*D.n) + "^" + std::to_string(D.theta));
      out.report(determinant_conditions(rd, *D.n));
    } else {
      out.value("checker", "reduced-datum unique-solution criteria");
      out.report(reduced_datum_conditions(rd));
    }
  }
  out.value("assumed", "finite-dimensionality of the Nichols algebra (not machine-checked)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit: exact construction and certification of finite-dimensional Hopf algebras"};
  app.set_version_flag("--version", std::string("hopfkit ") + kVersion);
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--mode", g.mode, "verification mode")->check(CLI::IsMember({"auto", "exact", "modular", "sampled"}));
  app.add_option("--seed", g.seed, "seed for prime choice and sampling");
  app.add_option("--threads", g.threads, "worker cap (0 = all cores)");
  app.add_flag("--json", g.json, "machine-readable report");
  app.add_option("--samples", g.samples, "basis indices per check in sampled mode");
  app.add_flag("--allow-large", g.allow_large, "verify above the modular size limit");
  std::uint32_t enumerate_limit = 2000;
  app.add_option("--enumerate-limit", enumerate_limit, "largest dimension for complete group-like enumeration");

  // build
  auto* build = app.add_subcommand("build", "build a named algebra or realize a presentation");
  std::string preset, halg, out_path, rmat_out;
  long m = 0, n = 0, l = -1, p = 7, q = 3, t = 2, q_exp = 1;
  std::vector<std::string> sets;
  build->add_option("--preset", preset, "group | A_l | taft | Apq")->check(CLI::IsMember({"group", "A_l", "taft", "Apq"}));
  build->add_option("--halg", halg, "presentation file (.halg) instead of a preset");
  build->add_option("--set", sets, "presentation parameter override name=value");
  build->add_option("--m", m);
  build->add_option("--n", n);
  build->add_option("--l", l);
  build->add_option("--p", p);
  build->add_option("--q", q);
  build->add_option("--t", t);
  build->add_option("--q-exp", q_exp, "Taft root zeta_n^q-exp");
  build->add_option("-o,--out", out_path, "output .hopf")->required();
  build->add_option("--rmat", rmat_out, "also write the R-matrix (Apq)");

  // double
  auto* dbl = app.add_subcommand("double", "Drinfeld double with its standard R-matrix");
  std::string dbl_in;
  dbl->add_option("input", dbl_in, ".hopf")->required();
  dbl->add_option("-o,--out", out_path, "output .hopf")->required();
  dbl->add_option("--rmat", rmat_out, "output .rmat");

  // quotient
  auto* quo = app.add_subcommand("quotient", "quotient by central group-likes");
  std::string quo_in;
  std::vector<std::string> by;
  quo->add_option("input", quo_in, ".hopf or .rmat (R is pushed forward)")->required();
  quo->add_option("--by", by, "group-like label, product of labels, or JSON sparse element")->required();
  quo->add_option("-o,--out", out_path, "output .hopf")->required();
  quo->add_option("--rmat", rmat_out, "output .rmat for the pushed-forward R");

  // verify
  auto* ver = app.add_subcommand("verify", "certify an algebra or a quasitriangular pair");
  std::string ver_in;
  bool all = false, axioms = false, qt = false, ribbon = false, fact = false;
  ver->add_option("input", ver_in, ".hopf or .rmat")->required();
  ver->add_flag("--all", all);
  ver->add_flag("--axioms", axioms);
  ver->add_flag("--quasitriangular", qt);
  ver->add_flag("--ribbon", ribbon);
  ver->add_flag("--factorizable", fact);

  // ribbon
  auto* rib = app.add_subcommand("ribbon", "Drinfeld element, admissible l and ribbon elements");
  std::vector<std::string> rib_in;
  rib->add_option("inputs", rib_in, "file.rmat, or file.hopf file.rmat")->required()->expected(1, 2);

  // analyze
  auto* ana = app.add_subcommand("analyze", "lattice criteria for a group datum");
  std::string ana_in;
  ana->add_option("input", ana_in, ".datum")->required();

  // report
  auto* rep = app.add_subcommand("report", "full certification report with digests");
  std::vector<std::string> rep_in;
  rep->add_option("inputs", rep_in, ".hopf, .rmat or .datum files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParameters;
  }

  thread_cap() = g.threads;
  std::string command = app.get_subcommands().front()->get_name();
  Output out(command, g);
  int code = kOk;
  try {
    if (*build) {
      VerifyOptions vo = g.verify();
      HopfAlgebra H;
      std::optional<Element> R;
      if (!halg.empty()) {
        std::map<std::string, long> ov;
        for (const auto& s : sets) {
          auto eq = s.find('=');
          if (eq == std::string::npos) throw Error(ErrorKind::BadParameters, "--set expects name=value, got " + s);
          try {
            ov[s.substr(0, eq)] = std::stol(s.substr(eq + 1));
          } catch (const std::exception&) {
            throw Error(ErrorKind::BadParameters, "--set value is not an integer: " + s);
          }
        }
        out.input(halg);
        Report r("realize");
        RealizeOptions ro;
        ro.verify = vo;
        H = realize_presentation(parse_presentation(detail::read_file(halg), ov), ro, &r);
        out.report(r);
      } else if (preset == "group") {
        if (m < 1 || n < 1) throw Error(ErrorKind::BadParameters, "--preset group needs --m and --n");
        H = group_algebra(metacyclic_group(m, n, l < 0 ? 1 : l), "kG(" + std::to_string(m) + "," + std::to_string(n) + ")");
        out.report(certify(H, vo));
      } else if (preset == "A_l") {
        Report r("build");
        H = build_script_A({p, q, t, l < 0 ? 0 : l}, {}, &r);
        out.report(r);
      } else if (preset == "taft") {
        const long nn = n ? n : 3;
        if (nn < 2) throw Error(ErrorKind::BadParameters, "Taft algebras need n >= 2");
        H = build_taft(nn, CycNumber::root_of_unity(nn, q_exp), vo);
        out.report(certify(H, vo));
      } else if (preset == "Apq") {
        ApqOptions ao;
        ao.verify = vo;
        if (vo.mode == Mode::Auto) ao.verify.mode = Mode::Modular;
        auto P = build_A_pq({p, q, t, 0}, ao);
        out.report(P.report);
        if (!P.qm.Rbar || !P.Rbar().verified) throw Error(ErrorKind::NotRMatrix, "pushed-forward R failed verification");
        R = P.Rbar().R;
        H = P.A();
      } else {
        throw Error(ErrorKind::BadParameters, "build needs --preset or --halg");
      }
      if (!H.certified) throw ExitRequest{kCertification, H.name + " failed certification"};
      out.value("name", H.name);
      out.value("dim", json(H.dim()), std::to_string(H.dim()));
      if (!rmat_out.empty() && !R) throw Error(ErrorKind::BadParameters, "--rmat is only available for --preset Apq");
      save_outputs(H, out_path, R ? &*R : nullptr, rmat_out, out);
    } else if (*dbl) {
      HopfAlgebra H = load_certified(dbl_in, g, out);
      DoubleOptions o;
      o.verify = g.verify();
      DoubleAlgebra dd = drinfeld_double(H, o);
      out.report(dd.report);
      if (!dd.D.certified) throw ExitRequest{kCertification, "double failed certification"};
      if (!dd.R.verified) throw ExitRequest{kCertification, "standard R failed verification"};
      out.value("dim", json(dd.D.dim()), std::to_string(dd.D.dim()));
      save_outputs(dd.D, out_path, &dd.R.R, rmat_out, out);
    } else if (*quo) {
      Loaded L = load_input(quo_in, g, out);
      std::optional<RMatrix> rm;
      if (L.R) {
        rm = verified_r(L.H, *L.R, g, out);
        if (!rm->verified) throw ExitRequest{kCertification, "input R-matrix failed verification"};
      }
      std::vector<NamedElement> gens;
      for (const auto& s : by) gens.push_back(to_named(s, resolve_element(L.H, s)));
      QuotientOptions qo;
      qo.verify = g.verify();
      QuotientMap qm = quotient_by_central_grouplikes(L.H, rm ? &*rm : nullptr, gens, qo);
      out.report(qm.report);
      if (!qm.quotient.certified) throw ExitRequest{kCertification, "quotient failed certification"};
      out.value("group_order", json(qm.group_order), std::to_string(qm.group_order));
      out.value("dim", json(qm.quotient.dim()),
                std::to_string(qm.quotient.dim()) + " = " + std::to_string(L.H.dim()) + " / " + std::to_string(qm.group_order));
      const Element* Rbar = (qm.Rbar && qm.Rbar->verified) ? &qm.Rbar->R : nullptr;
      if (rm && !Rbar) throw ExitRequest{kCertification, "pushed-forward R failed verification"};
      save_outputs(qm.quotient, out_path, Rbar, rmat_out, out);
    } else if (*ver) {
      if (!(all || axioms || qt || ribbon || fact)) axioms = true;
      const bool needs_r = all ? ext(ver_in) == ".rmat" : (qt || ribbon || fact);
      if (needs_r && ext(ver_in) != ".rmat")
        throw Error(ErrorKind::BadParameters, "--quasitriangular/--ribbon/--factorizable need an .rmat input");
      Loaded L = load_input(ver_in, g, out, false);  // the axiom suite always runs
      if (L.H.certified && L.R && (all || qt || ribbon || fact)) {
        RMatrix rm = verified_r(L.H, *L.R, g, out);
        if (rm.verified) {
          if (all || fact) run_factorizable(L.H, rm, g, out);
          if (all || ribbon) run_ribbon(L.H, rm, out, enumerate_limit);
        }
      }
      code = out.ok() ? kOk : kCheckFailed;
    } else if (*rib) {
      std::string rpath = rib_in.back();
      if (ext(rpath) != ".rmat") throw Error(ErrorKind::BadParameters, "ribbon needs an .rmat input");
      Loaded L;
      if (rib_in.size() == 2) {
        L.H = load_certified(rib_in[0], g, out);
        out.input(rpath);
        L.R = parse_rmat(detail::read_file(rpath), L.H).R;
      } else {
        L = load_input(rpath, g, out);
      }
      RMatrix rm = verified_r(L.H, *L.R, g, out);
      if (!rm.verified) throw ExitRequest{kCertification, "R-matrix failed verification"};
      run_ribbon(L.H, rm, out, enumerate_limit);
      code = out.ok() ? kOk : kCheckFailed;
    } else if (*ana) {
      analyze_datum(ana_in, out);
      code = out.ok() ? kOk : kCheckFailed;
    } else if (*rep) {
      for (const auto& path : rep_in) {
        if (ext(path) == ".datum") {
          analyze_datum(path, out);
          continue;
        }
        Loaded L = load_input(path, g, out, false);
        out.value(path + ".dim", json(L.H.dim()), std::to_string(L.H.dim()));
        out.value(path + ".conductor", json(L.H.conductor), std::to_string(L.H.conductor));
        out.value(path + ".certification", L.H.certification);
        if (L.H.certified && L.R) {
          RMatrix rm = verified_r(L.H, *L.R, g, out);
          if (rm.verified) {
            run_factorizable(L.H, rm, g, out);
            run_ribbon(L.H, rm, out, enumerate_limit);
          }
        }
      }
      code = out.ok() ? kOk : kCheckFailed;
    }
  } catch (const ExitRequest& e) {
    out.print();
    std::cerr << "hopfkit: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    out.print();
    std::cerr << "hopfkit: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    out.print();
    std::cerr << "hopfkit: " << e.what() << "\n";
    return kCheckFailed;
  }
  out.print();
  return code;
}
