#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uglov/canonical.hpp"
#include "uglov/hecke.hpp"
#include "uglov/verify.hpp"

namespace {

using uglov::Bipartition;
using uglov::Charge;
using uglov::ChargeTarget;
using uglov::Modulus;
using uglov::NodeOrder;

int parse_int(const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("invalid integer '" + text + "'");
  return value;
}

// "s0,s1" with an optional trailing + or - selecting an asymptotic labelling.
struct ChargeSpec {
  Charge charge;
  char variant = 0; // 0 = exact
};

ChargeSpec parse_charge_spec(const std::string& text, bool allow_variant) {
  std::string body = text;
  char variant = 0;
  if (!body.empty() && (body.back() == '+' || body.back() == '-') && body.size() > 1 &&
      body[body.size() - 2] != ',') {
    variant = body.back();
    body.pop_back();
  }
  if (variant != 0 && !allow_variant)
    throw std::invalid_argument("charge '" + text + "' must be exact here (no +/- suffix)");
  auto comma = body.find(',');
  if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("charge '" + text + "' must look like s0,s1");
  Charge c{parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1))};
  return {c, variant};
}

Modulus parse_modulus(const std::string& text) {
  if (text == "infinity" || text == "inf") return Modulus::infinity();
  int e = parse_int(text);
  if (e < 2) throw std::invalid_argument("e must be >= 2 (or 'infinity')");
  return Modulus::finite(e);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(text);
    return {v, v};
  }
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

NodeOrder make_order(const ChargeSpec& spec, Modulus e) {
  if (spec.variant == 0) return NodeOrder::uglov(spec.charge);
  if (!e.is_finite())
    throw std::invalid_argument("asymptotic labellings need a finite e");
  int ev = e.value();
  if (spec.charge.s0 < 0 || spec.charge.s0 >= ev || spec.charge.s1 < 0 || spec.charge.s1 >= ev)
    throw std::invalid_argument("asymptotic residues must lie in [0, e)");
  return spec.variant == '+' ? NodeOrder::asymptotic_plus(spec.charge.s0, spec.charge.s1)
                             : NodeOrder::asymptotic_minus(spec.charge.s0, spec.charge.s1);
}

ChargeTarget make_target(const ChargeSpec& spec, int e) {
  if (spec.variant == 0) return ChargeTarget::exact(spec.charge);
  if (spec.charge.s0 < 0 || spec.charge.s0 >= e || spec.charge.s1 < 0 || spec.charge.s1 >= e)
    throw std::invalid_argument("asymptotic residues must lie in [0, e)");
  return spec.variant == '+' ? ChargeTarget::asymptotic_plus(spec.charge.s0, spec.charge.s1)
                             : ChargeTarget::asymptotic_minus(spec.charge.s0, spec.charge.s1);
}

nlohmann::json order_json(const NodeOrder& order) {
  const char* kind = "uglov";
  if (order.kind() == NodeOrder::Kind::asymptotic_plus) kind = "asymptotic_plus";
  if (order.kind() == NodeOrder::Kind::asymptotic_minus) kind = "asymptotic_minus";
  return {{"kind", kind}, {"charge", {order.charge().s0, order.charge().s1}}};
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << payload;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct EnumerateOpts {
  std::string e, charge, format = "text", output;
  int n = 0;
  bool flotw = false;
};

int run_enumerate(const EnumerateOpts& o) {
  Modulus e = parse_modulus(o.e);
  ChargeSpec spec = parse_charge_spec(o.charge, true);
  NodeOrder order = make_order(spec, e);
  if (o.n < 0) throw std::invalid_argument("n must be nonnegative");
  auto levels = uglov::enumerate_levels(e, order, o.n);
  const auto& level = levels[static_cast<std::size_t>(o.n)];

  if (o.flotw) {
    if (spec.variant != 0 || !e.is_finite() ||
        !(0 <= spec.charge.s0 && spec.charge.s0 <= spec.charge.s1 && spec.charge.s1 < e.value()))
      throw std::invalid_argument(
          "--flotw needs a finite e and an exact charge with 0 <= s0 <= s1 < e");
    std::set<Bipartition> direct;
    for (const Bipartition& bp : uglov::all_bipartitions(o.n))
      if (uglov::is_flotw(bp, e.value(), spec.charge)) direct.insert(bp);
    if (direct != std::set<Bipartition>(level.begin(), level.end())) {
      std::cerr << "flotw cross-check failed: recursive and direct sets differ\n";
      return 1;
    }
    std::cerr << "flotw cross-check passed\n";
  }

  std::string payload;
  if (o.format == "text") {
    for (const Bipartition& bp : level) payload += uglov::to_text(bp) + "\n";
    std::cerr << "cardinality: " << level.size() << "\n";
  } else if (o.format == "json") {
    nlohmann::json j;
    if (e.is_finite())
      j["e"] = e.value();
    else
      j["e"] = "infinity";
    j["order"] = order_json(order);
    j["n"] = o.n;
    j["cardinality"] = level.size();
    auto arr = nlohmann::json::array();
    for (const Bipartition& bp : level) arr.push_back(uglov::to_text(bp));
    j["bipartitions"] = std::move(arr);
    payload = dump(j);
  } else {
    throw std::invalid_argument("enumerate supports --format text|json");
  }
  emit(payload, o.output);
  return 0;
}

struct MapOpts {
  std::string e, from, to, format = "text", output, input;
  bool oracle = false;
};

int run_map(const MapOpts& o) {
  Modulus mod = parse_modulus(o.e);
  if (!mod.is_finite()) throw std::invalid_argument("map needs a finite e");
  int e = mod.value();
  Charge from = parse_charge_spec(o.from, false).charge;
  ChargeTarget target = make_target(parse_charge_spec(o.to, true), e);

  std::vector<std::string> lines;
  if (!o.input.empty()) {
    lines.push_back(o.input);
  } else {
    std::string line;
    while (std::getline(std::cin, line))
      if (!line.empty()) lines.push_back(line);
  }

  bool oracle_ok = true;
  nlohmann::json results = nlohmann::json::array();
  std::string text_payload;
  for (const std::string& line : lines) {
    Bipartition bp = uglov::parse_bipartition(line);
    Bipartition image = uglov::relabel(bp, e, from, target);
    if (o.oracle) {
      NodeOrder to_order = target.kind == ChargeTarget::Kind::exact
                               ? NodeOrder::uglov(target.charge)
                           : target.kind == ChargeTarget::Kind::asymptotic_plus
                               ? NodeOrder::asymptotic_plus(target.charge.s0, target.charge.s1)
                               : NodeOrder::asymptotic_minus(target.charge.s0, target.charge.s1);
      Bipartition recursive =
          uglov::relabel_recursive(bp, mod, NodeOrder::uglov(from), to_order);
      if (recursive != image) {
        std::cerr << "oracle disagreement on " << uglov::to_text(bp) << ": plan gives "
                  << uglov::to_text(image) << ", crystal replay gives "
                  << uglov::to_text(recursive) << "\n";
        oracle_ok = false;
      }
    }
    if (o.format == "json") {
      nlohmann::json r;
      r["input"] = uglov::to_text(bp);
      r["output"] = uglov::to_text(image);
      r["plan"] = uglov::to_json(uglov::make_plan(e, from, target, bp.rank()));
      results.push_back(std::move(r));
    } else {
      text_payload += uglov::to_text(image) + "\n";
    }
  }

  std::string payload;
  if (o.format == "json") {
    nlohmann::json j;
    j["e"] = e;
    j["from"] = {from.s0, from.s1};
    const char* kind = target.kind == ChargeTarget::Kind::exact ? "exact"
                       : target.kind == ChargeTarget::Kind::asymptotic_plus
                           ? "asymptotic_plus"
                           : "asymptotic_minus";
    j["to"] = {{"kind", kind}, {"charge", {target.charge.s0, target.charge.s1}}};
    j["results"] = std::move(results);
    payload = dump(j);
  } else if (o.format == "text") {
    payload = text_payload;
  } else {
    throw std::invalid_argument("map supports --format text|json");
  }
  emit(payload, o.output);
  return oracle_ok ? 0 : 1;
}

struct SymbolOpts {
  std::string charge, format = "text", output, input, m_text;
};

int run_symbol(const SymbolOpts& o) {
  Charge charge = parse_charge_spec(o.charge, false).charge;
  Bipartition bp = uglov::parse_bipartition(o.input);
  std::optional<int> m;
  if (!o.m_text.empty()) m = parse_int(o.m_text);
  uglov::Symbol s = uglov::to_symbol(bp, charge, m);
  std::string payload;
  if (o.format == "text")
    payload = uglov::to_text(s) + "\n";
  else if (o.format == "json")
    payload = dump(uglov::to_json(s));
  else
    throw std::invalid_argument("symbol supports --format text|json");
  emit(payload, o.output);
  return 0;
}

struct CanonicalOpts {
  std::string charge, format = "text", output, input;
};

int run_canonical(const CanonicalOpts& o) {
  Charge charge = parse_charge_spec(o.charge, false).charge;
  Bipartition bp = uglov::parse_bipartition(o.input);
  uglov::CanonicalElement el = uglov::pair_orbit(bp, charge);
  std::string payload;
  if (o.format == "text")
    payload = uglov::to_text(el) + "\n";
  else if (o.format == "json")
    payload = dump(uglov::to_json(el));
  else
    throw std::invalid_argument("canonical supports --format text|json");
  emit(payload, o.output);
  return 0;
}

struct BasicSetOpts {
  int a = 0, b = 0, l = 0;
  std::string format = "text", output;
};

int run_basic_set(const BasicSetOpts& o) {
  uglov::BasicSet bs = uglov::basic_set_charge(o.a, o.b, o.l);
  std::string payload;
  if (o.format == "text") {
    payload += "e = " + std::to_string(bs.e) + "\n";
    payload += "d = " + std::to_string(bs.d) + "\n";
    std::string all;
    for (int d : bs.d_all) all += (all.empty() ? "" : ", ") + std::to_string(d);
    payload += "d_all = " + all + "\n";
    payload += "p = " + std::to_string(bs.p) + "\n";
    payload += "charge = (" + std::to_string(bs.charge.s0) + ", " +
               std::to_string(bs.charge.s1) + ")\n";
  } else if (o.format == "json") {
    payload = dump(uglov::to_json(bs));
  } else {
    throw std::invalid_argument("basic-set supports --format text|json");
  }
  emit(payload, o.output);
  return 0;
}

struct GraphOpts {
  std::string e, charge, format = "dot", output;
  int max_rank = 0;
};

int run_graph(const GraphOpts& o) {
  Modulus e = parse_modulus(o.e);
  NodeOrder order = make_order(parse_charge_spec(o.charge, true), e);
  if (o.max_rank < 0) throw std::invalid_argument("max-rank must be nonnegative");
  uglov::CrystalGraph g = uglov::build_crystal(e, order, o.max_rank);
  std::string payload;
  if (o.format == "dot" || o.format == "text")
    payload = uglov::to_dot(g);
  else if (o.format == "json")
    payload = dump(uglov::to_json(g));
  else
    throw std::invalid_argument("graph supports --format dot|json");
  emit(payload, o.output);
  return 0;
}

struct VerifyCliOpts {
  std::string suite, e_range = "2..4", n_range = "0..8", charge;
  long long budget = 1'000'000;
  int jobs = 1;
  unsigned seed = 20260822;
  int samples = 1000;
};

int run_verify(const VerifyCliOpts& o) {
  uglov::VerifyOptions opts;
  auto [e_lo, e_hi] = parse_range(o.e_range);
  if (e_lo < 2) throw std::invalid_argument("verify needs e >= 2");
  auto [n_lo, n_hi] = parse_range(o.n_range);
  if (n_lo < 0) throw std::invalid_argument("verify needs n >= 0");
  opts.e_min = e_lo;
  opts.e_max = e_hi;
  opts.n_min = n_lo;
  opts.n_max = n_hi;
  if (o.budget < 1) throw std::invalid_argument("budget must be positive");
  opts.budget = o.budget;
  if (o.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  opts.jobs = o.jobs;
  opts.seed = o.seed;
  if (o.samples < 0) throw std::invalid_argument("samples must be nonnegative");
  opts.samples = o.samples;
  if (!o.charge.empty()) opts.window = parse_charge_spec(o.charge, false).charge;

  auto results = uglov::run_suites(o.suite, opts);
  bool all_ok = true;
  for (const uglov::SuiteResult& r : results) {
    std::cout << r.suite << ": " << r.checks << " checks, " << r.failures << " failures ["
              << (r.ok() ? "PASS" : "FAIL") << "]\n";
    std::cerr << r.suite << ": " << r.seconds << "s\n";
    for (const std::string& m : r.messages) std::cerr << "  " << m << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-2 Fock space crystals, symbols, and labelling maps"};
  app.require_subcommand(1);

  EnumerateOpts eo;
  auto* enumerate = app.add_subcommand("enumerate", "List the highest-weight bipartitions of a rank");
  enumerate->add_option("--e", eo.e, "quantum characteristic (integer >= 2 or 'infinity')")->required();
  enumerate->add_option("--charge", eo.charge, "charge s0,s1; suffix + or - for asymptotic labellings")->required();
  enumerate->add_option("--n", eo.n, "rank to list")->required();
  enumerate->add_flag("--flotw", eo.flotw, "cross-check against the direct row/residue conditions");
  enumerate->add_option("--format", eo.format, "text | json")->capture_default_str();
  enumerate->add_option("-o,--output", eo.output, "write to file instead of stdout");

  MapOpts mo;
  auto* map_cmd = app.add_subcommand("map", "Relabel bipartitions between charges");
  map_cmd->add_option("--e", mo.e, "quantum characteristic (integer >= 2)")->required();
  map_cmd->add_option("--from", mo.from, "source charge s0,s1")->required();
  map_cmd->add_option("--to", mo.to, "target charge s0,s1, or v0,v1+ / v0,v1- asymptotic")->required();
  map_cmd->add_flag("--oracle", mo.oracle, "also run the recursive crystal map and compare");
  map_cmd->add_option("--format", mo.format, "text | json")->capture_default_str();
  map_cmd->add_option("-o,--output", mo.output, "write to file instead of stdout");
  map_cmd->add_option("bipartition", mo.input, "bipartition like [8|4]; stdin lines when omitted");

  SymbolOpts so;
  auto* symbol = app.add_subcommand("symbol", "Print the two-row symbol of a bipartition");
  symbol->add_option("--charge", so.charge, "charge s0,s1 with 0 <= s0 <= s1")->required();
  symbol->add_option("--m", so.m_text, "padding (defaults to the canonical choice)");
  symbol->add_option("--format", so.format, "text | json")->capture_default_str();
  symbol->add_option("-o,--output", so.output, "write to file instead of stdout");
  symbol->add_option("bipartition", so.input, "bipartition like [2,2,1|3,2]")->required();

  CanonicalOpts co;
  auto* canonical = app.add_subcommand("canonical", "Canonical basis element attached to a bipartition");
  canonical->add_option("--charge", co.charge, "charge s0,s1 with 0 <= s0 <= s1")->required();
  canonical->add_option("--format", co.format, "text | json")->capture_default_str();
  canonical->add_option("-o,--output", co.output, "write to file instead of stdout");
  canonical->add_option("bipartition", co.input, "head bipartition like [8|4]")->required();

  BasicSetOpts bo;
  auto* basic = app.add_subcommand("basic-set", "Charge parameters for a Hecke-algebra basic set");
  basic->add_option("--a", bo.a, "first eigenvalue exponent")->required();
  basic->add_option("--b", bo.b, "second eigenvalue exponent")->required();
  basic->add_option("--l", bo.l, "root-of-unity order (even)")->required();
  basic->add_option("--format", bo.format, "text | json")->capture_default_str();
  basic->add_option("-o,--output", bo.output, "write to file instead of stdout");

  GraphOpts go;
  auto* graph = app.add_subcommand("graph", "Export the crystal graph up to a rank");
  graph->add_option("--e", go.e, "quantum characteristic (integer >= 2 or 'infinity')")->required();
  graph->add_option("--charge", go.charge, "charge s0,s1; suffix + or - for asymptotic labellings")->required();
  graph->add_option("--max-rank", go.max_rank, "largest rank to include")->required();
  graph->add_flag_callback("--dot", [&go] { go.format = "dot"; }, "emit DOT (the default)");
  graph->add_option("--format", go.format, "dot | json")->capture_default_str();
  graph->add_option("-o,--output", go.output, "write to file instead of stdout");

  VerifyCliOpts vo;
  auto* verify = app.add_subcommand("verify", "Run a property suite over a parameter grid");
  verify->add_option("suite", vo.suite,
                     "main | flotw | stabilize | degree-max | cardinality | inverse | hecke | all")
      ->required();
  verify->add_option("--e", vo.e_range, "e range, e.g. 2..4 or 3")->capture_default_str();
  verify->add_option("--n", vo.n_range, "rank range, e.g. 0..8 or 5")->capture_default_str();
  verify->add_option("--charge", vo.charge, "restrict window suites to one charge s0,s1");
  verify->add_option("--budget", vo.budget, "cap on bipartition visits per suite")->capture_default_str();
  verify->add_option("--jobs", vo.jobs, "worker pool size")->capture_default_str();
  verify->add_option("--seed", vo.seed, "seed for the randomized suites")->capture_default_str();
  verify->add_option("--samples", vo.samples, "sample count for the randomized suites")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(eo);
    if (app.got_subcommand(map_cmd)) return run_map(mo);
    if (app.got_subcommand(symbol)) return run_symbol(so);
    if (app.got_subcommand(canonical)) return run_canonical(co);
    if (app.got_subcommand(basic)) return run_basic_set(bo);
    if (app.got_subcommand(graph)) return run_graph(go);
    if (app.got_subcommand(verify)) return run_verify(vo);
  } catch (const uglov::budget_exceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const uglov::error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2; // no subcommand selected; require_subcommand should prevent this
}
