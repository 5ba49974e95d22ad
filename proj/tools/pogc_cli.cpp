// pogc: completions, recognition, orderings and the 3-SAT reduction from the
// command line. Exit codes: 0 yes, 1 no (certificate or violation printed),
// 2 input error, 3 size guard or unsupported instance.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pogc/aux_graph.hpp"
#include "pogc/classify.hpp"
#include "pogc/completions.hpp"
#include "pogc/errors.hpp"
#include "pogc/friendly.hpp"
#include "pogc/hardness.hpp"
#include "pogc/interval.hpp"
#include "pogc/json.hpp"
#include "pogc/round.hpp"

using namespace pogc;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kInput = 2, kUnsupported = 3;

struct InputError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Out {
  bool as_json = false;
  bool dot = false;
  json j = json::object();

  void pog(const Pog& p) {
    j["arcs"] = arcs_to_json(p);
    if (p.edge_count() > 0) j["edges"] = edges_to_json(p);
    if (!as_json) std::cout << render_pog(p, dot ? Format::dot : Format::native);
  }
  void certificate(const Pog& p, const Certificate& c) {
    j["certificate"] = certificate_to_json(p, c);
    if (!as_json) std::cout << j["certificate"].dump(2) << '\n';
  }
  void ordering(const Pog& p, const Ordering& o) {
    j["ordering"] = ordering_to_json(p, o);
    if (!as_json) std::cout << render_ordering(p, o);
  }
  void representation(const Pog& g, const Representation& r) {
    j["representation"] = representation_to_json(g, r);
    if (!as_json) std::cout << render_representation(g, r);
  }
  int finish(bool yes, const std::string& cls) {
    j["status"] = yes ? "yes" : "no";
    j["class"] = cls;
    if (as_json)
      std::cout << j.dump(2) << '\n';
    else
      std::cerr << (yes ? "yes" : "no") << '\n';
    return yes ? kYes : kNo;
  }
};

int complete_cmd(const std::string& cls, const Pog& p, Out& out) {
  auto emit = [&](const Outcome<Pog>& r) {
    if (r.ok())
      out.pog(r.value());
    else
      out.certificate(p, r.certificate());
    return out.finish(r.ok(), cls);
  };
  if (cls == "lt") return emit(complete_via_aux(p));
  if (cls == "quasi-transitive") return emit(complete_via_aux(p, AuxMode::quasi_transitive));
  if (cls == "acyclic-lt") return emit(complete_to_acyclic_lt(p));
  if (cls == "ltlt-friendly") return emit(complete_friendly(p));
  if (cls == "transitive") return emit(complete_to_transitive_tournament(p));
  if (cls == "in-tournament") return emit(complete_to_in_tournament(p));
  if (cls == "strong") return emit(complete_to_strong(p));
  if (cls == "cycle-factor") return emit(complete_to_cycle_factor_bruteforce(p));
  // ltt-exact
  auto r = exact_complete(p, ExactTarget::ltt);
  if (r.count > 0) return emit(r.completions.front());
  Certificate c;
  c.tag = CertTag::NoCompletion;
  c.location = "exact-ltt";
  return emit(c);
}

int recognize_cmd(const std::string& cls, const Pog& p, Out& out) {
  const Pog g = underlying(p);
  if (cls == "chordal") {
    if (is_chordal(g)) {
      out.ordering(g, peo_from_lbfs(lbfs(g)));
      return out.finish(true, cls);
    }
    out.certificate(g, *find_interval_obstruction(g));
    return out.finish(false, cls);
  }
  Outcome<Representation> r = cls == "proper-interval"
                                   ? [&]() -> Outcome<Representation> {
                                       auto d = complete_to_acyclic_lt(g);
                                       if (!d) return d.certificate();
                                       return representation_from_orientation(d.value(), RepKind::interval);
                                     }()
                                   : extend_circular_arc_representation(g, Representation{RepKind::circular, 0, {}});
  if (r.ok())
    out.representation(g, r.value());
  else
    out.certificate(g, r.certificate());
  return out.finish(r.ok(), cls);
}

OrderCheck order_kind(const std::string& k) {
  if (k == "round") return OrderCheck::round;
  if (k == "nice") return OrderCheck::nice;
  return OrderCheck::excellent;
}

int check_ordering_cmd(const std::string& kind, const Pog& p, const Ordering& o, Out& out) {
  if (!is_permutation_of(o, p.size())) throw InputError("ordering must list every vertex exactly once");
  auto v = check_ordering(p, o, order_kind(kind));
  if (!v.ok) {
    out.j["violation"] = json::array();
    for (Vertex w : v.tuple) out.j["violation"].push_back(p.name(w));
    if (!out.as_json) std::cout << "violation " << out.j["violation"].dump() << '\n';
  }
  return out.finish(v.ok, kind);
}

int extend_cmd(const std::string& kind, bool allow_uncovered, const Pog& p, const Representation& h, Out& out) {
  const Pog g = underlying(p);
  auto r = kind == "interval" ? extend_interval_representation(g, h)
                              : extend_circular_arc_representation(g, h, {allow_uncovered});
  if (r.ok())
    out.representation(g, r.value());
  else
    out.certificate(g, r.certificate());
  return out.finish(r.ok(), kind);
}

int reduce_cmd(const std::string& dimacs, const std::string& witness, Out& out) {
  auto r = build_reduction(parse_dimacs(dimacs));
  if (witness.empty()) {
    out.pog(r.pog);
    return out.finish(true, "reduce-3sat");
  }
  std::string text = std::filesystem::exists(witness) ? slurp(witness) : witness;
  std::vector<bool> t;
  try {
    t = parse_assignment(text, r.formula.n_vars);
  } catch (const Error& e) {
    throw InputError(std::string("assignment: ") + e.what());
  }
  if (!satisfies(r.formula, t)) throw InputError("assignment does not satisfy the formula");
  out.ordering(r.pog, assignment_to_ordering(r, t));
  return out.finish(true, "reduce-3sat");
}

int verify_cmd(const Pog& p, const std::string& cert_text, Out& out) {
  json j;
  try {
    j = json::parse(cert_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
  if (j.is_object() && j.contains("certificate")) j = j["certificate"];
  Certificate c;
  try {
    c = certificate_from_json(p, j);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  bool ok = verify_certificate(p, c);
  out.j["certificate"] = certificate_to_json(p, c);
  return out.finish(ok, "verify-cert");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completions of partially oriented graphs"};
  app.require_subcommand(1);
  Out out;
  app.add_flag("--json", out.as_json, "Machine-readable output");

  std::string cls, kind, file, second, witness;
  bool allow_uncovered = false;

  auto* complete = app.add_subcommand("complete", "Complete a pog to a class or print a certificate");
  complete->add_option("--class", cls)
      ->required()
      ->check(CLI::IsMember({"lt", "acyclic-lt", "ltlt-friendly", "ltt-exact", "transitive", "in-tournament",
                             "quasi-transitive", "strong", "cycle-factor"}));
  complete->add_option("file", file)->required();
  complete->add_flag("--dot", out.dot, "Print the completion as DOT");

  auto* recognize = app.add_subcommand("recognize", "Recognise a graph class");
  recognize->add_option("--class", cls)
      ->required()
      ->check(CLI::IsMember({"proper-interval", "proper-circular-arc", "chordal"}));
  recognize->add_option("file", file)->required();

  auto* check = app.add_subcommand("check-ordering", "Check a cyclic ordering");
  check->add_option("--kind", kind)->required()->check(CLI::IsMember({"round", "excellent", "nice"}));
  check->add_option("file", file)->required();
  check->add_option("ordering", second)->required();

  auto* extend = app.add_subcommand("extend-rep", "Extend a partial representation");
  extend->add_option("--kind", kind)->required()->check(CLI::IsMember({"interval", "circular"}));
  extend->add_flag("--allow-uncovered", allow_uncovered, "Allow complement components missing from H");
  extend->add_option("graph", file)->required();
  extend->add_option("partial", second)->required();

  auto* reduce = app.add_subcommand("reduce-3sat", "Build the reduction instance of a 3-CNF formula");
  reduce->add_option("dimacs", file)->required();
  reduce->add_option("--witness", witness, "Satisfying assignment (file or literals); prints an ordering");
  reduce->add_flag("--dot", out.dot, "Print the instance as DOT");

  auto* verify = app.add_subcommand("verify-cert", "Check a certificate against a pog");
  verify->add_option("file", file)->required();
  verify->add_option("cert", second)->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", out.as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*reduce) return reduce_cmd(slurp(file), witness, out);
    const Pog p = parse_pog(slurp(file));
    if (*complete) return complete_cmd(cls, p, out);
    if (*recognize) return recognize_cmd(cls, p, out);
    if (*check) return check_ordering_cmd(kind, p, parse_ordering(slurp(second), p), out);
    if (*extend) return extend_cmd(kind, allow_uncovered, p, parse_representation(slurp(second), underlying(p)), out);
    return verify_cmd(p, slurp(second), out);
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kUnsupported;
  } catch (const UnsupportedInstance& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const PreconditionError& e) {
    bool bad_input = e.code() == "MalformedFormula" || e.code() == "InvalidRepresentation" ||
                     e.code() == "NotSatisfying";
    std::cerr << (bad_input ? "input error: " : "unsupported: ") << e.what() << '\n';
    return bad_input ? kInput : kUnsupported;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  }
}
