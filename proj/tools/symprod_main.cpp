// symprod: exact generating series for characteristic classes and genera of
// symmetric and external products. JSON in (flags or a request envelope),
// JSON out, byte-identical across runs and thread counts.

#include <CLI11.hpp>

#include <symprod/class_function.hpp>
#include <symprod/free_algebra.hpp>
#include <symprod/gen_series.hpp>
#include <symprod/graded_class.hpp>
#include <symprod/guards.hpp>
#include <symprod/json_io.hpp>
#include <symprod/parallel.hpp>
#include <symprod/verify.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using symprod::json;

// --- plumbing ---------------------------------------------------------------

json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open file '" + arg.substr(1) + "'");
    return json::parse(in);
  }
  return json::parse(arg);
}

void emit(const json& out, const std::string& output_path) {
  std::string text = out.dump(2);
  text.push_back('\n');
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write output file '" + output_path + "'");
  file << text;
}

json error_object(int code, const std::string& type, const std::string& message) {
  json err;
  err["schema_version"] = symprod::kSchemaVersion;
  err["error"] = json{{"code", code}, {"type", type}, {"message", message}};
  return err;
}

json header(const std::string& command) {
  json out;
  out["schema_version"] = symprod::kSchemaVersion;
  out["command"] = command;
  return out;
}

// Reads an optional payload field with a typed default.
template <class T>
T field_or(const json& payload, const std::string& key, T fallback) {
  if (!payload.contains(key)) return fallback;
  return payload.at(key).get<T>();
}

symprod::LaurentY chi_from_payload(const json& payload) {
  if (!payload.contains("chi")) throw std::invalid_argument("missing 'chi'");
  return symprod::laurent_from_json(payload.at("chi"));
}

symprod::GradedClass class_from_payload(const json& payload) {
  if (!payload.contains("class")) throw std::invalid_argument("missing 'class'");
  return symprod::graded_class_from_json(payload.at("class"));
}

int order_from_payload(const json& payload) {
  if (!payload.contains("order")) throw std::invalid_argument("missing 'order'");
  int order = payload.at("order").get<int>();
  if (order < 0) throw std::invalid_argument("'order' must be >= 0");
  return order;
}

std::vector<symprod::Permutation> subgroup_from_payload(const json& payload, int n) {
  if (!payload.contains("subgroup")) throw std::invalid_argument("missing 'subgroup'");
  std::vector<symprod::Permutation> gens;
  for (const auto& entry : payload.at("subgroup"))
    gens.push_back(symprod::permutation_from_cycles(entry.get<std::string>(), n));
  return symprod::subgroup_closure(n, gens);
}

symprod::ClassFunction rep_from_payload(const json& payload, int n) {
  std::string rep = field_or<std::string>(payload, "rep", "trivial");
  if (rep == "trivial") return symprod::ClassFunction::trivial(n);
  if (rep == "sign") return symprod::ClassFunction::sign(n);
  if (rep == "regular") return symprod::ClassFunction::regular(n);
  if (rep == "irreducible") {
    if (!payload.contains("mu")) throw std::invalid_argument("rep 'irreducible' needs 'mu'");
    symprod::Partition mu = symprod::partition_from_json(payload.at("mu"));
    if (mu.n() != n) throw std::invalid_argument("'mu' must be a partition of n");
    return symprod::irreducible_character(mu);
  }
  if (rep == "induced")
    return symprod::induced_trivial_character(n, subgroup_from_payload(payload, n));
  if (rep == "raw") {
    if (!payload.contains("values")) throw std::invalid_argument("rep 'raw' needs 'values'");
    symprod::ClassFunction f = symprod::class_function_from_json(payload.at("values"));
    if (f.n() != n) throw std::invalid_argument("'values' class function has the wrong n");
    return f;
  }
  throw std::invalid_argument("unknown rep '" + rep + "'");
}

// --- command handlers: payload JSON in, result JSON out ----------------------

json cmd_series(const json& payload) {
  symprod::GradedClass cl = class_from_payload(payload);
  int order = order_from_payload(payload);
  bool push = field_or<bool>(payload, "push", false);
  std::string variant = field_or<std::string>(payload, "variant", "plain");

  symprod::TruncSeries<symprod::FreeAlgElement> series(order);
  if (variant == "plain")
    series = push ? symprod::symmetric_product_series(cl, order)
                  : symprod::equivariant_class_series(cl, order);
  else if (variant == "identity")
    series = symprod::identity_projection(symprod::equivariant_class_series(cl, order));
  else if (variant == "symmetric")
    series = symprod::power_series_variant(cl, order, symprod::PowerVariant::Symmetric);
  else if (variant == "alternating")
    series = symprod::power_series_variant(cl, order, symprod::PowerVariant::Alternating);
  else if (variant == "forgetful")
    series = symprod::power_series_variant(cl, order, symprod::PowerVariant::Forgetful);
  else
    throw std::invalid_argument("unknown series variant '" + variant + "'");

  json out = header("series");
  out["class"] = symprod::graded_class_to_json(cl);
  out["variant"] = variant;
  out["push"] = push || variant == "symmetric" || variant == "alternating" ||
                variant == "forgetful";
  out["series"] = symprod::series_to_json(series);
  return out;
}

json cmd_symmetric(const json& payload) {
  symprod::LaurentY chi = chi_from_payload(payload);
  int order = order_from_payload(payload);
  std::string variant = field_or<std::string>(payload, "variant", "symmetric");
  symprod::DegreeVariant v;
  if (variant == "symmetric")
    v = symprod::DegreeVariant::Symmetric;
  else if (variant == "alternating")
    v = symprod::DegreeVariant::Alternating;
  else
    throw std::invalid_argument("unknown symmetric variant '" + variant + "'");

  auto series = symprod::degree_symmetric_series(chi, order, v);
  json pretty = json::array();
  for (int n = 0; n <= order; ++n) pretty.push_back(series.coeff(n).str());

  json out = header("symmetric");
  out["chi"] = chi.str();
  out["variant"] = variant;
  out["series"] = symprod::series_to_json(series);
  out["coefficients"] = pretty;
  return out;
}

json cmd_twist(const json& payload) {
  if (!payload.contains("n")) throw std::invalid_argument("missing 'n'");
  int n = payload.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("'n' must be >= 0");
  symprod::ClassFunction rep = rep_from_payload(payload, n);
  bool degree_level = payload.contains("chi");
  bool class_level = payload.contains("class");
  if (degree_level == class_level)
    throw std::invalid_argument("provide exactly one of 'chi' or 'class'");

  json out = header("twist");
  out["n"] = n;
  out["rep"] = field_or<std::string>(payload, "rep", "trivial");
  if (degree_level) {
    symprod::LaurentY chi = chi_from_payload(payload);
    symprod::YSymFunc genus = symprod::twisted_genus(n, rep, chi);
    symprod::LaurentY scalar = symprod::twisted_genus_scalar(n, rep, chi);
    out["chi"] = chi.str();
    out["value"] = symprod::ysymfunc_to_json(genus);
    out["scalar"] = symprod::laurent_scalar_to_json(scalar);
    out["pretty"] = scalar.str();
  } else {
    symprod::GradedClass cl = class_from_payload(payload);
    out["class"] = symprod::graded_class_to_json(cl);
    out["value"] = symprod::element_to_json(symprod::twisted_class(n, rep, cl));
  }
  return out;
}

json cmd_schur(const json& payload) {
  if (!payload.contains("mu")) throw std::invalid_argument("missing 'mu'");
  symprod::Partition mu = symprod::partition_from_json(payload.at("mu"));
  symprod::GradedClass cl = class_from_payload(payload);
  int n = mu.n();

  json out = header("schur");
  out["mu"] = symprod::partition_to_json(mu);
  out["n"] = n;
  out["class"] = symprod::graded_class_to_json(cl);
  out["value"] = symprod::element_to_json(symprod::schur_class(n, mu, cl));
  if (field_or<bool>(payload, "check", false))
    out["decomposition_ok"] = symprod::schur_decomposition_check(n, cl);
  return out;
}

json cmd_quotient(const json& payload) {
  if (!payload.contains("n")) throw std::invalid_argument("missing 'n'");
  int n = payload.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("'n' must be >= 1");
  symprod::LaurentY chi = chi_from_payload(payload);
  auto subgroup = subgroup_from_payload(payload, n);
  symprod::LaurentY genus = symprod::quotient_genus(n, subgroup, chi);

  json out = header("quotient");
  out["n"] = n;
  out["subgroup_order"] = subgroup.size();
  out["chi"] = chi.str();
  out["value"] = symprod::laurent_scalar_to_json(genus);
  out["pretty"] = genus.str();
  return out;
}

json cmd_orbifold(const json& payload) {
  symprod::Rational e =
      symprod::rational_from_json(payload.contains("euler") ? payload.at("euler") : json("2"));
  json out = header("orbifold");
  out["euler"] = symprod::rational_to_json(e);
  if (payload.contains("n")) {
    int n = payload.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("'n' must be >= 0");
    out["n"] = n;
    out["value"] = symprod::rational_to_json(symprod::orbifold_euler(n, e));
  } else {
    int order = order_from_payload(payload);
    json values = json::array();
    for (int n = 0; n <= order; ++n)
      values.push_back(symprod::rational_to_json(symprod::orbifold_euler(n, e)));
    out["order"] = order;
    out["values"] = values;
  }
  return out;
}

json cmd_ohmoto(const json& payload) {
  int order = order_from_payload(payload);
  std::string family = field_or<std::string>(payload, "family", "z");
  std::map<int, symprod::Rational> j;
  if (family == "z")
    j = symprod::j_constant_one(order);
  else if (family == "z2")
    j = symprod::j_divisor_sum(order);
  else if (family == "raw") {
    if (!payload.contains("j")) throw std::invalid_argument("family 'raw' needs 'j'");
    for (const auto& [key, value] : payload.at("j").items())
      j[std::stoi(key)] = symprod::rational_from_json(value);
  } else {
    throw std::invalid_argument("unknown family '" + family + "' (use z, z2 or raw)");
  }

  json out = header("ohmoto");
  out["family"] = family;
  out["order"] = order;
  if (payload.contains("class")) {
    symprod::GradedClass cl = class_from_payload(payload);
    out["class"] = symprod::graded_class_to_json(cl);
    out["series"] = symprod::series_to_json(symprod::ohmoto_series(j, cl, order));
  } else {
    symprod::Rational e =
        symprod::rational_from_json(payload.contains("euler") ? payload.at("euler") : json("1"));
    out["euler"] = symprod::rational_to_json(e);
    out["series"] = symprod::series_to_json(symprod::ohmoto_scalar_series(j, e, order));
  }
  return out;
}

json cmd_verify(const json& payload) {
  symprod::verify::Options options;
  options.max_n = field_or<int>(payload, "max_n", options.max_n);
  options.trials = field_or<int>(payload, "trials", options.trials);
  options.seed = field_or<unsigned long long>(payload, "seed", options.seed);
  options.threads = field_or<int>(payload, "threads", options.threads);

  std::vector<std::string> names;
  if (payload.contains("suites"))
    for (const auto& entry : payload.at("suites")) names.push_back(entry.get<std::string>());
  if (names.empty() || (names.size() == 1 && names[0] == "all"))
    names = symprod::verify::suite_names();

  auto results = symprod::verify::run_suites(names, options);
  long total_checks = 0;
  long total_failures = 0;
  json suites = json::array();
  for (const auto& r : results) {
    total_checks += r.checks;
    total_failures += static_cast<long>(r.failures.size());
    json entry;
    entry["name"] = r.name;
    entry["checks"] = r.checks;
    entry["failures"] = r.failures;
    suites.push_back(entry);
  }

  json out = header("verify");
  out["max_n"] = options.max_n;
  out["trials"] = options.trials;
  out["seed"] = options.seed;
  out["suites"] = suites;
  out["checks"] = total_checks;
  out["failures"] = total_failures;
  out["ok"] = total_failures == 0;
  return out;
}

json dispatch(const std::string& command, const json& payload) {
  if (command == "series") return cmd_series(payload);
  if (command == "symmetric") return cmd_symmetric(payload);
  if (command == "twist") return cmd_twist(payload);
  if (command == "schur") return cmd_schur(payload);
  if (command == "quotient") return cmd_quotient(payload);
  if (command == "orbifold") return cmd_orbifold(payload);
  if (command == "ohmoto") return cmd_ohmoto(payload);
  if (command == "verify") return cmd_verify(payload);
  throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symprod: exact generating series for symmetric and external products"};
  app.require_subcommand(1);

  std::string command;
  json payload = json::object();
  std::string output_path;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output_path, "Write JSON to this file instead of stdout");
  };

  // series
  {
    auto* sub = app.add_subcommand("series", "Class-level series in the free delocalized algebra");
    auto cls = std::make_shared<std::string>();
    auto order = std::make_shared<int>(4);
    auto push = std::make_shared<bool>(false);
    auto variant = std::make_shared<std::string>("plain");
    sub->add_option("--class", *cls, "Graded class as inline JSON or @file")->required();
    sub->add_option("--order", *order, "Truncation order N");
    sub->add_flag("--push", *push, "Pushforward to the symmetric-product series");
    sub->add_option("--variant", *variant,
                    "plain | identity | symmetric | alternating | forgetful");
    add_output(sub);
    sub->callback([&, cls, order, push, variant] {
      command = "series";
      payload["class"] = read_json_arg(*cls);
      payload["order"] = *order;
      payload["push"] = *push;
      payload["variant"] = *variant;
    });
  }

  // symmetric
  {
    auto* sub = app.add_subcommand("symmetric", "Degree-level symmetric-product genus series");
    auto chi = std::make_shared<std::string>();
    auto order = std::make_shared<int>(6);
    auto variant = std::make_shared<std::string>("symmetric");
    sub->add_option("--chi", *chi, "Genus of the base, e.g. \"1+y\"")->required();
    sub->add_option("--order", *order, "Truncation order N");
    sub->add_option("--variant", *variant, "symmetric | alternating");
    add_output(sub);
    sub->callback([&, chi, order, variant] {
      command = "symmetric";
      payload["chi"] = *chi;
      payload["order"] = *order;
      payload["variant"] = *variant;
    });
  }

  // twist
  {
    auto* sub = app.add_subcommand("twist", "Representation-twisted class or genus");
    auto n = std::make_shared<int>(0);
    auto rep = std::make_shared<std::string>("trivial");
    auto mu = std::make_shared<std::string>();
    auto subgroup = std::make_shared<std::vector<std::string>>();
    auto values = std::make_shared<std::string>();
    auto chi = std::make_shared<std::string>();
    auto cls = std::make_shared<std::string>();
    sub->add_option("--n", *n, "Power n")->required();
    sub->add_option("--rep", *rep, "trivial | sign | regular | irreducible | induced | raw");
    sub->add_option("--mu", *mu, "Partition for rep=irreducible, e.g. \"[2,1]\"");
    sub->add_option("--subgroup", *subgroup, "Generators for rep=induced (cycle notation)");
    sub->add_option("--values", *values, "Class function JSON (inline or @file) for rep=raw");
    sub->add_option("--chi", *chi, "Degree-level input, e.g. \"1+y\"");
    sub->add_option("--class", *cls, "Class-level input: graded class JSON or @file");
    add_output(sub);
    sub->callback([&, n, rep, mu, subgroup, values, chi, cls] {
      command = "twist";
      payload["n"] = *n;
      payload["rep"] = *rep;
      if (!mu->empty()) payload["mu"] = symprod::partition_to_json(symprod::partition_from_string(*mu));
      if (!subgroup->empty()) payload["subgroup"] = *subgroup;
      if (!values->empty()) payload["values"] = read_json_arg(*values);
      if (!chi->empty()) payload["chi"] = *chi;
      if (!cls->empty()) payload["class"] = read_json_arg(*cls);
    });
  }

  // schur
  {
    auto* sub = app.add_subcommand("schur", "Schur-functor class for a partition");
    auto mu = std::make_shared<std::string>();
    auto cls = std::make_shared<std::string>();
    auto check = std::make_shared<bool>(false);
    sub->add_option("--mu", *mu, "Partition, e.g. \"[2,1]\"")->required();
    sub->add_option("--class", *cls, "Graded class JSON or @file")->required();
    sub->add_flag("--check", *check, "Also verify the full Schur decomposition at this n");
    add_output(sub);
    sub->callback([&, mu, cls, check] {
      command = "schur";
      payload["mu"] = symprod::partition_to_json(symprod::partition_from_string(*mu));
      payload["class"] = read_json_arg(*cls);
      payload["check"] = *check;
    });
  }

  // quotient
  {
    auto* sub = app.add_subcommand("quotient", "Genus of the quotient of the n-th power by K");
    auto n = std::make_shared<int>(0);
    auto subgroup = std::make_shared<std::vector<std::string>>();
    auto chi = std::make_shared<std::string>();
    sub->add_option("--n", *n, "Power n")->required();
    sub->add_option("--subgroup", *subgroup, "Subgroup generators in cycle notation")
        ->required();
    sub->add_option("--chi", *chi, "Genus of the base, e.g. \"1+y\"")->required();
    add_output(sub);
    sub->callback([&, n, subgroup, chi] {
      command = "quotient";
      payload["n"] = *n;
      payload["subgroup"] = *subgroup;
      payload["chi"] = *chi;
    });
  }

  // orbifold
  {
    auto* sub = app.add_subcommand("orbifold", "Orbifold Euler characteristics of power stacks");
    auto n = std::make_shared<int>(-1);
    auto order = std::make_shared<int>(-1);
    auto euler = std::make_shared<std::string>("2");
    sub->add_option("--n", *n, "Single power n");
    sub->add_option("--order", *order, "Emit values for all n up to this order");
    sub->add_option("--euler", *euler, "Euler characteristic of the base (exact rational)");
    add_output(sub);
    sub->callback([&, n, order, euler] {
      command = "orbifold";
      payload["euler"] = *euler;
      if (*n >= 0) payload["n"] = *n;
      if (*order >= 0) payload["order"] = *order;
      if (*n < 0 && *order < 0) payload["order"] = 5;
    });
  }

  // ohmoto
  {
    auto* sub = app.add_subcommand("ohmoto", "Subgroup-counting generating series");
    auto family = std::make_shared<std::string>("z");
    auto order = std::make_shared<int>(5);
    auto euler = std::make_shared<std::string>("1");
    auto cls = std::make_shared<std::string>();
    auto jraw = std::make_shared<std::string>();
    sub->add_option("--family", *family, "z | z2 | raw (index-r subgroup counts)");
    sub->add_option("--order", *order, "Truncation order N");
    sub->add_option("--euler", *euler, "Scalar shadow: Euler characteristic of the base");
    sub->add_option("--class", *cls, "Class-level input: graded class JSON or @file");
    sub->add_option("--j", *jraw, "Subgroup-count table for family=raw (JSON {\"r\": count})");
    add_output(sub);
    sub->callback([&, family, order, euler, cls, jraw] {
      command = "ohmoto";
      payload["family"] = *family;
      payload["order"] = *order;
      payload["euler"] = *euler;
      if (!cls->empty()) payload["class"] = read_json_arg(*cls);
      if (!jraw->empty()) payload["j"] = read_json_arg(*jraw);
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify", "Run engine-vs-oracle verification suites");
    auto suites = std::make_shared<std::vector<std::string>>();
    auto max_n = std::make_shared<int>(5);
    auto trials = std::make_shared<int>(10);
    auto seed = std::make_shared<unsigned long long>(1);
    auto threads = std::make_shared<int>(symprod::default_thread_count());
    sub->add_option("--suite", *suites,
                    "all | conjsum | kunneth | macdonald | quotient | frobenius | twist | "
                    "orbifold | diagram");
    sub->add_option("--max-n", *max_n, "Largest n used by the randomized suites");
    sub->add_option("--trials", *trials, "Randomized trials per suite");
    sub->add_option("--seed", *seed, "Seed for randomized inputs");
    sub->add_option("--threads", *threads, "Worker threads");
    add_output(sub);
    sub->callback([&, suites, max_n, trials, seed, threads] {
      command = "verify";
      payload["suites"] = *suites;
      payload["max_n"] = *max_n;
      payload["trials"] = *trials;
      payload["seed"] = *seed;
      payload["threads"] = *threads;
    });
  }

  // run: request envelope
  {
    auto* sub = app.add_subcommand("run", "Execute a JSON request envelope");
    auto file = std::make_shared<std::string>();
    sub->add_option("request", *file, "Request file: {\"command\", \"payload\", ...}")
        ->required();
    sub->callback([&, file] {
      json envelope = read_json_arg("@" + *file);
      if (!envelope.contains("command"))
        throw std::invalid_argument("request envelope: missing 'command'");
      command = envelope.at("command").get<std::string>();
      payload = envelope.contains("payload") ? envelope.at("payload") : json::object();
      if (envelope.contains("order") && !payload.contains("order"))
        payload["order"] = envelope.at("order");
      if (envelope.contains("output")) output_path = envelope.at("output").get<std::string>();
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_object(1, "validation", e.what()), "");
    return 1;
  } catch (const symprod::guard_error& e) {
    emit(error_object(2, "guard", e.what()), "");
    return 2;
  } catch (const std::exception& e) {
    emit(error_object(1, "validation", e.what()), "");
    return 1;
  }

  try {
    json out = dispatch(command, payload);
    emit(out, output_path);
    if (command == "verify" && !out.at("ok").get<bool>()) return 1;
    return 0;
  } catch (const symprod::guard_error& e) {
    emit(error_object(2, "guard", e.what()), "");
    return 2;
  } catch (const std::exception& e) {
    emit(error_object(1, "validation", e.what()), "");
    return 1;
  }
}
