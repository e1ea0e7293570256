#include "pomsetcodes/experiment.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pomsetcodes {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

std::vector<CodeVector> parse_vectors(const json& j, const char* key) {
  std::vector<CodeVector> out;
  if (!j.is_array()) fail(std::string(key) + " must be an array of integer arrays");
  for (const auto& row : j) {
    if (!row.is_array()) fail(std::string(key) + " must be an array of integer arrays");
    CodeVector v;
    for (const auto& e : row) {
      if (!e.is_number_integer()) fail(std::string(key) + " entries must be integers");
      v.push_back(e.get<int>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

json vectors_to_json(const std::vector<CodeVector>& vectors) {
  json out = json::array();
  for (const auto& v : vectors) out.push_back(v);
  return out;
}

}  // namespace

int PomsetSpec::total_points() const {
  if (kind == Kind::direct || kind == Kind::ordinal) {
    int total = 0;
    for (const auto& part : parts) total += part.total_points();
    return total;
  }
  return points;
}

Pomset PomsetSpec::build(int m) const {
  switch (kind) {
    case Kind::chain:
      return Pomset::chain(points, m);
    case Kind::antichain:
      return Pomset::antichain(points, m);
    case Kind::explicit_pairs:
      return Pomset::from_strict_pairs(points, m, pairs);
    case Kind::direct:
    case Kind::ordinal: {
      if (parts.size() < 2) fail("pomset sum needs at least two parts");
      Pomset out = parts[0].build(m);
      const SumMode mode = kind == Kind::direct ? SumMode::direct : SumMode::ordinal;
      for (std::size_t k = 1; k < parts.size(); ++k)
        out = combine_pomsets(out, parts[k].build(m), mode);
      return out;
    }
  }
  fail("unknown pomset kind");
}

std::string PomsetSpec::describe() const {
  switch (kind) {
    case Kind::chain:
      return "chain(" + std::to_string(points) + ")";
    case Kind::antichain:
      return "antichain(" + std::to_string(points) + ")";
    case Kind::explicit_pairs: {
      std::string out = "explicit(" + std::to_string(points) + ";";
      for (auto [a, b] : pairs) out += " " + std::to_string(a) + "<" + std::to_string(b);
      return out + ")";
    }
    case Kind::direct:
    case Kind::ordinal: {
      std::string out = kind == Kind::direct ? "direct[" : "ordinal[";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) out += ", ";
        out += parts[k].describe();
      }
      return out + "]";
    }
  }
  return "?";
}

PomsetSpec PomsetSpec::from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail("pomset description needs a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  PomsetSpec spec;
  if (kind == "chain" || kind == "antichain" || kind == "explicit") {
    if (!j.contains("points") || !j["points"].is_number_integer())
      fail("pomset leaf needs an integer \"points\"");
    spec.points = j["points"].get<int>();
    if (kind == "chain") {
      spec.kind = Kind::chain;
    } else if (kind == "antichain") {
      spec.kind = Kind::antichain;
    } else {
      spec.kind = Kind::explicit_pairs;
      if (j.contains("pairs")) {
        if (!j["pairs"].is_array()) fail("\"pairs\" must be an array of 2-element arrays");
        for (const auto& pair : j["pairs"]) {
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
              !pair[1].is_number_integer())
            fail("\"pairs\" must be an array of 2-element integer arrays");
          spec.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
      }
    }
    return spec;
  }
  if (kind == "direct" || kind == "ordinal") {
    spec.kind = kind == "direct" ? Kind::direct : Kind::ordinal;
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].size() < 2)
      fail("pomset sum needs a \"parts\" array with at least two entries");
    for (const auto& part : j["parts"]) spec.parts.push_back(PomsetSpec::from_json(part));
    return spec;
  }
  fail("unknown pomset kind \"" + kind + "\"");
}

json PomsetSpec::to_json() const {
  json out;
  switch (kind) {
    case Kind::chain:
      out["kind"] = "chain";
      out["points"] = points;
      break;
    case Kind::antichain:
      out["kind"] = "antichain";
      out["points"] = points;
      break;
    case Kind::explicit_pairs: {
      out["kind"] = "explicit";
      out["points"] = points;
      json list = json::array();
      for (auto [a, b] : pairs) list.push_back(json::array({a, b}));
      out["pairs"] = std::move(list);
      break;
    }
    case Kind::direct:
    case Kind::ordinal: {
      out["kind"] = kind == Kind::direct ? "direct" : "ordinal";
      json list = json::array();
      for (const auto& part : parts) list.push_back(part.to_json());
      out["parts"] = std::move(list);
      break;
    }
  }
  return out;
}

ExperimentSpec ExperimentSpec::from_json(const json& j) {
  if (!j.is_object()) fail("spec must be a JSON object");
  ExperimentSpec spec;
  if (!j.contains("m") || !j["m"].is_number_integer()) fail("spec needs an integer \"m\"");
  spec.m = j["m"].get<int>();
  if (!j.contains("blocks") || !j["blocks"].is_array()) fail("spec needs a \"blocks\" array");
  for (const auto& d : j["blocks"]) {
    if (!d.is_number_integer()) fail("\"blocks\" entries must be integers");
    spec.blocks.push_back(d.get<int>());
  }
  if (!j.contains("pomset")) fail("spec needs a \"pomset\" description");
  spec.pomset = PomsetSpec::from_json(j["pomset"]);
  const bool has_generators = j.contains("generators");
  const bool has_words = j.contains("words");
  if (has_generators && has_words) fail("give either \"generators\" or \"words\", not both");
  if (has_generators) {
    spec.generators = parse_vectors(j["generators"], "generators");
    spec.has_code = true;
  } else if (has_words) {
    spec.words = parse_vectors(j["words"], "words");
    spec.explicit_words = true;
    spec.has_code = true;
  }
  if (j.contains("options")) {
    const auto& opt = j["options"];
    if (!opt.is_object()) fail("\"options\" must be an object");
    if (opt.contains("method")) spec.options.method = opt["method"].get<std::string>();
    if (opt.contains("trials")) spec.options.trials = opt["trials"].get<int>();
    if (opt.contains("seed")) spec.options.seed = opt["seed"].get<std::uint64_t>();
    if (opt.contains("budget")) spec.options.budget = opt["budget"].get<long long>();
  }
  return spec;
}

ExperimentSpec ExperimentSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open spec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail("spec file is not valid JSON: " + std::string(e.what()));
  }
  return from_json(j);
}

json ExperimentSpec::to_json() const {
  json out;
  out["m"] = m;
  out["blocks"] = blocks;
  out["pomset"] = pomset.to_json();
  if (has_code) {
    if (explicit_words) out["words"] = vectors_to_json(words);
    else out["generators"] = vectors_to_json(generators);
  }
  out["options"] = {{"method", options.method},
                    {"trials", options.trials},
                    {"seed", options.seed},
                    {"budget", options.budget}};
  return out;
}

BlockStructure ExperimentSpec::block_structure() const { return {m, blocks}; }

Pomset ExperimentSpec::build_pomset() const {
  if (pomset.total_points() != static_cast<int>(blocks.size()))
    fail("pomset point count must equal the number of blocks");
  return pomset.build(m);
}

LinearCode ExperimentSpec::build_code() const {
  if (!has_code) fail("spec has no \"generators\" or \"words\"");
  const BlockStructure b = block_structure();
  if (explicit_words) return {b, words};
  return LinearCode::span(b, generators);
}

namespace {

std::string enumerator_lines(const std::string& label, const WeightEnumerator& w) {
  return label + ": A = " + w.coeff_list() + "\n" + label + ": W = " + w.to_string() + "\n";
}

std::string spec_header(const std::string& command, const ExperimentSpec& spec) {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "modulus: " << spec.m << "\n";
  out << "blocks: [";
  for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
    if (k > 0) out << ", ";
    out << spec.blocks[k];
  }
  out << "]\n";
  out << "pomset: " << spec.pomset.describe() << "\n";
  return out.str();
}

std::string pick_method(const ExperimentSpec& spec) {
  const std::string& method = spec.options.method;
  if (method != "auto") {
    if (method != "theorem" && method != "corollary" && method != "sum" && method != "fourier")
      fail("unknown method \"" + method + "\"");
    return method;
  }
  switch (spec.pomset.kind) {
    case PomsetSpec::Kind::chain:
      return "theorem";
    case PomsetSpec::Kind::direct:
    case PomsetSpec::Kind::ordinal:
      return "sum";
    default:
      return "fourier";
  }
}

// Splits the code across the top-level parts of a pomset sum; each component
// keeps only the words supported on its own coordinates.
std::vector<SumPart> decompose_for_sum(const ExperimentSpec& spec, const LinearCode& code) {
  if (spec.pomset.kind != PomsetSpec::Kind::direct &&
      spec.pomset.kind != PomsetSpec::Kind::ordinal)
    fail("method \"sum\" needs a direct or ordinal pomset sum at the top level");
  const long long budget = spec.options.budget;
  std::vector<SumPart> parts;
  long long product = 1;
  int block_at = 0;
  int coord_at = 0;
  for (const PomsetSpec& part_spec : spec.pomset.parts) {
    const int part_points = part_spec.total_points();
    std::vector<int> dims(spec.blocks.begin() + block_at,
                          spec.blocks.begin() + block_at + part_points);
    const BlockStructure part_structure(spec.m, dims);
    const int part_len = part_structure.length();

    std::vector<CodeVector> part_words;
    for (const CodeVector& u : code.words()) {
      bool outside_zero = true;
      for (int k = 0; k < static_cast<int>(u.size()); ++k)
        if (u[k] != 0 && (k < coord_at || k >= coord_at + part_len)) outside_zero = false;
      if (outside_zero)
        part_words.emplace_back(u.begin() + coord_at, u.begin() + coord_at + part_len);
    }
    const LinearCode part_code(part_structure, std::move(part_words));
    const Pomset part_pomset = part_spec.build(spec.m);
    parts.push_back({weight_enumerator(part_code.dual(budget), part_pomset.dual()),
                     part_code.size(), part_len, part_points});
    product *= part_code.size();
    block_at += part_points;
    coord_at += part_len;
  }
  if (product != code.size())
    fail("code does not decompose as a direct sum across the pomset parts");
  return parts;
}

CommandResult finish_error(std::string report, const std::string& message, int code) {
  report += "error: " + message + "\n";
  report += "RESULT: error\n";
  return {code, std::move(report)};
}

CommandResult run(const std::string& command, const ExperimentSpec& spec) {
  std::string report = spec_header(command, spec);

  if (command == "probe") {
    const BlockStructure b = spec.block_structure();
    const Pomset p = spec.build_pomset();
    const ProbeReport probe =
        macwilliams_probe(p, b, spec.options.trials, spec.options.seed, spec.options.budget);
    std::ostringstream out;
    out << "trials: " << probe.trials << "\n";
    out << "distinct codes: " << probe.distinct_codes << "\n";
    out << "pairs compared: " << probe.pairs_compared << "\n";
    if (!probe.witness) {
      out << "witness: none\n";
      report += out.str();
      report += "RESULT: equal\n";
      return {0, std::move(report)};
    }
    const ProbeWitness& w = *probe.witness;
    out << "witness: found\n";
    out << "code A:";
    for (const auto& word : w.code_a) out << " " << format_vector(word);
    out << "\ncode B:";
    for (const auto& word : w.code_b) out << " " << format_vector(word);
    out << "\nshared enumerator: "
        << WeightEnumerator(static_cast<int>(w.shared_enumerator.size()) - 1,
                            w.shared_enumerator)
               .coeff_list()
        << "\n";
    out << "dual enumerator A: "
        << WeightEnumerator(static_cast<int>(w.dual_enumerator_a.size()) - 1,
                            w.dual_enumerator_a)
               .coeff_list()
        << "\n";
    out << "dual enumerator B: "
        << WeightEnumerator(static_cast<int>(w.dual_enumerator_b.size()) - 1,
                            w.dual_enumerator_b)
               .coeff_list()
        << "\n";
    out << "first differing coefficient: A_" << w.first_difference << "\n";
    report += out.str();
    report += "RESULT: mismatch\n";
    return {1, std::move(report)};
  }

  const BlockStructure b = spec.block_structure();
  const Pomset p = spec.build_pomset();
  const LinearCode code = spec.build_code();
  report += "code: " + std::to_string(code.size()) + " words\n";

  if (command == "enumerate") {
    report += enumerator_lines("enumerator", weight_enumerator(code, p));
    report += "RESULT: equal\n";
    return {0, std::move(report)};
  }

  if (command == "dual") {
    const LinearCode dual = code.dual(spec.options.budget);
    report += "dual code: " + std::to_string(dual.size()) + " words\n";
    if (dual.size() <= 64) {
      report += "dual words:";
      for (const auto& word : dual.words()) report += " " + format_vector(word);
      report += "\n";
    }
    report += enumerator_lines("dual enumerator", weight_enumerator(dual, p.dual()));
    report += "RESULT: equal\n";
    return {0, std::move(report)};
  }

  if (command == "verify") {
    const std::string method = pick_method(spec);
    report += "method: " + method + "\n";
    WeightEnumerator identity(0);
    if (method == "theorem") {
      identity = chain_dual_enumerator(code, p);
    } else if (method == "corollary") {
      identity = field_dim2_dual_enumerator(code, p);
    } else if (method == "fourier") {
      identity = fourier_dual_enumerator(code, p, spec.options.budget);
    } else {
      identity = sum_dual_enumerator(decompose_for_sum(spec, code),
                                     spec.pomset.kind == PomsetSpec::Kind::direct
                                         ? SumMode::direct
                                         : SumMode::ordinal,
                                     spec.m);
    }
    const WeightEnumerator brute =
        weight_enumerator(code.dual(spec.options.budget), p.dual());
    const IdentityReport result = make_identity_report(
        std::to_string(code.size()) + " words over Z_" + std::to_string(spec.m), method,
        identity, brute);
    report += enumerator_lines("identity", result.via_identity);
    report += enumerator_lines("brute force", result.via_brute_force);
    if (result.equal) {
      report += "RESULT: equal\n";
      return {0, std::move(report)};
    }
    report += "first differing coefficient: A_" + std::to_string(result.first_difference) +
              " identity=" + std::to_string(result.via_identity.coeff(result.first_difference)) +
              " brute=" + std::to_string(result.via_brute_force.coeff(result.first_difference)) +
              "\n";
    report += "RESULT: mismatch\n";
    return {1, std::move(report)};
  }

  fail("unknown command \"" + command + "\"");
}

}  // namespace

CommandResult execute(const std::string& command, const ExperimentSpec& spec) {
  try {
    return run(command, spec);
  } catch (const BudgetExceeded& e) {
    return finish_error(spec_header(command, spec), e.what(), 3);
  } catch (const std::invalid_argument& e) {
    return finish_error(spec_header(command, spec), e.what(), 2);
  } catch (const std::logic_error& e) {
    return finish_error(spec_header(command, spec), e.what(), 2);
  }
}

}  // namespace pomsetcodes
