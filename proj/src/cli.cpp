#include "modinv/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modinv/demazure.hpp"
#include "modinv/group.hpp"
#include "modinv/stable_chain.hpp"
#include "modinv/verify.hpp"

namespace modinv {

namespace {

using nlohmann::ordered_json;

/// Raised for malformed arguments; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

Prime parse_prime(const std::string& text) {
  std::uint32_t v = 0;
  std::istringstream is(text);
  if (!(is >> v) || !is.eof()) throw UsageError("--prime expects a prime, got '" + text + "'");
  try {
    return Prime(v);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<Prime> parse_primes(const std::string& text) {
  if (text == "all-small") return {Prime(2), Prime(3), Prime(5), Prime(7)};
  std::vector<Prime> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_prime(item));
  if (out.empty()) throw UsageError("--prime is empty");
  return out;
}

struct GroupArg {
  std::string label;
  MatrixGroup group;
};

GroupArg parse_group(const std::string& text, Prime p) {
  if (text.starts_with("gens:")) {
    const auto gens = parse_matrix_list(std::string_view(text).substr(5), p);
    if (gens.empty()) throw UsageError("gens: needs at least one matrix");
    return {text, generate_closure(p, gens)};
  }
  const CatalogSpec spec = parse_catalog_spec(text);
  return {to_string(spec), catalog_group(spec, p)};
}

ordered_json polys_json(const std::vector<Poly2>& polys) {
  auto arr = ordered_json::array();
  for (const auto& f : polys) arr.push_back(f.to_string());
  return arr;
}

int cmd_verify(const std::string& prime_text, const std::string& theorem, const std::string& format, bool timing,
               unsigned threads, std::ostream& out) {
  const auto primes = parse_primes(prime_text);
  std::vector<std::string> targets;
  if (theorem == "all") {
    for (const auto& t : theorem_catalog()) targets.push_back(t.id);
  } else {
    std::stringstream ss(theorem);
    std::string item;
    while (std::getline(ss, item, ',')) {
      find_theorem(item);
      targets.push_back(item);
    }
  }
  const auto reports = run_verification(primes, targets, {threads, timing});
  out << emit_reports(reports, format == "json" ? ReportFormat::Json : ReportFormat::Text);
  for (const auto& r : reports)
    if (r.status() == Status::Fail) return 1;
  return 0;
}

int cmd_stable(const std::string& prime_text, const std::string& group_text, std::uint32_t max_iter,
               std::ostream& out) {
  const Prime p = parse_prime(prime_text);
  const GroupArg g = parse_group(group_text, p);
  const StableChainResult res = stable_chain(g.group, max_iter);
  ordered_json j;
  j["prime"] = p.value();
  j["group"] = g.label;
  j["order"] = g.group.order();
  j["stabilization_index"] = res.stabilization_index;
  auto steps = ordered_json::array();
  for (std::size_t i = 0; i < res.ideals.size(); ++i) {
    const QuotientDims qd = quotient_dims(res.ideals[i]);
    ordered_json s;
    s["index"] = i + 1;
    s["generators"] = polys_json(minimal_generators(res.ideals[i]));
    s["quotient_dims"] = qd.dims;
    s["topdeg"] = qd.topdeg ? ordered_json(*qd.topdeg) : ordered_json(nullptr);
    s["new_invariants"] = polys_json(res.new_invariants[i]);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_gen(const std::string& prime_text, const std::string& reflections, std::ostream& out) {
  const Prime p = parse_prime(prime_text);
  std::vector<Reflection> s;
  for (const auto& m : parse_matrix_list(reflections, p)) {
    if (!is_reflection(m)) throw UsageError("not a reflection: " + m.to_string());
    s.emplace_back(m);
  }
  if (s.empty()) throw UsageError("--reflections needs at least one matrix");
  const GenInvResult res = generalized_ideal(s);
  ordered_json j;
  j["prime"] = p.value();
  auto refl = ordered_json::array();
  for (const auto& r : s) refl.push_back(r.matrix().to_string());
  j["reflections"] = std::move(refl);
  j["generators"] = polys_json(res.generators);
  j["degrees"] = res.degrees;
  j["regular_sequence"] = res.regular_sequence;
  j["topdeg"] = res.topdeg ? ordered_json(*res.topdeg) : ordered_json(nullptr);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_classify(const std::string& prime_text, const std::string& mats, std::ostream& out) {
  const Prime p = parse_prime(prime_text);
  const auto gens = parse_matrix_list(mats, p);
  if (gens.empty()) throw UsageError("--matrices needs at least one matrix");
  const MatrixGroup g = generate_closure(p, gens);
  const GroupClass cls = classify(g);
  out << cls.tag_string() << " order=" << g.order();
  if (cls.conjugator) out << " conjugator=" << cls.conjugator->to_string();
  out << '\n';
  return 0;
}

int cmd_invariants(const std::string& prime_text, const std::string& group_text, std::uint32_t max_degree,
                   std::ostream& out) {
  const Prime p = parse_prime(prime_text);
  const GroupArg g = parse_group(group_text, p);
  ordered_json j;
  j["prime"] = p.value();
  j["group"] = g.label;
  j["order"] = g.group.order();
  auto degrees = ordered_json::array();
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    const Subspace inv = invariant_slice(p, g.group.generators(), d);
    std::vector<Poly2> basis;
    for (const auto& v : inv.basis()) basis.push_back(from_slice(p, d, v));
    ordered_json e;
    e["degree"] = d;
    e["dim"] = inv.dim();
    e["basis"] = polys_json(basis);
    degrees.push_back(std::move(e));
  }
  j["degrees"] = std::move(degrees);
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular invariant theory of rank-two reflection groups over F_p"};
  app.name("modinv");
  app.require_subcommand(1);

  std::string prime, theorem = "all", format = "text", group, reflections, mats;
  bool timing = false;
  unsigned threads = 0;
  std::uint32_t max_iter = 10, max_degree = 0;

  auto* verify = app.add_subcommand("verify", "Check theorem statements and emit reports");
  verify->add_option("--prime", prime, "Prime, comma list, or all-small (2,3,5,7)")->required();
  verify->add_option("--theorem", theorem, "Theorem id, comma list, or all");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "Record elapsed_ms");
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)");

  auto* stable = app.add_subcommand("stable", "Compute the chain J_1, J_2, ... of a group");
  stable->add_option("--prime", prime, "Prime")->required();
  stable->add_option("--group", group, "L:r, U:r,s or gens:<matrices>")->required();
  stable->add_option("--max-iter", max_iter, "Iteration limit");

  auto* gen = app.add_subcommand("gen", "Compute the generalized-invariant ideal of a reflection set");
  gen->add_option("--prime", prime, "Prime")->required();
  gen->add_option("--reflections", reflections, "Whitespace-separated matrices a,b;c,d")->required();

  auto* cls = app.add_subcommand("classify", "Classify the group generated by matrices");
  cls->add_option("--prime", prime, "Prime")->required();
  cls->add_option("--matrices", mats, "Whitespace-separated matrices a,b;c,d")->required();

  auto* inv = app.add_subcommand("invariants", "List invariants degree by degree");
  inv->add_option("--prime", prime, "Prime")->required();
  inv->add_option("--group", group, "L:r, U:r,s or gens:<matrices>")->required();
  inv->add_option("--max-degree", max_degree, "Highest degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(prime, theorem, format, timing, threads, out);
    if (*stable) return cmd_stable(prime, group, max_iter, out);
    if (*gen) return cmd_gen(prime, reflections, out);
    if (*cls) return cmd_classify(prime, mats, out);
    if (*inv) return cmd_invariants(prime, group, max_degree, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownTarget& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace modinv
