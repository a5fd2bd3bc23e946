#include "cyclattice/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "cyclattice/conditions.hpp"
#include "cyclattice/errors.hpp"
#include "cyclattice/oracle.hpp"

namespace cyc::cli {

using nlohmann::json;

Expr parseExpr(std::string_view text) {
  std::size_t pos = 0;
  auto skipSpace = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skipSpace();
  if (pos >= text.size()) throw ParseError("empty expression", pos);
  ExprKind kind;
  if (text[pos] == 'C') {
    kind = ExprKind::Union;
  } else if (text[pos] == 'S') {
    kind = ExprKind::Cond;
  } else {
    throw ParseError("expected 'C' or 'S'", pos);
  }
  ++pos;
  if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
  ++pos;

  std::vector<PosInt> values;
  while (true) {
    skipSpace();
    if (pos >= text.size()) throw ParseError("unterminated expression", pos);
    if (text[pos] == '}' && values.empty()) throw ParseError("empty braces", pos);
    if (text[pos] == '-') throw ParseError("negative cycle length", pos);
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError("expected a positive integer", pos);
    const std::size_t start = pos;
    PosInt value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const PosInt digit = static_cast<PosInt>(text[pos] - '0');
      if (__builtin_mul_overflow(value, PosInt{10}, &value) || __builtin_add_overflow(value, digit, &value))
        throw ParseError("integer too large", start);
      ++pos;
    }
    if (value == 0) throw ParseError("cycle length must be positive", start);
    values.push_back(value);
    skipSpace();
    if (pos >= text.size()) throw ParseError("unterminated expression", pos);
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == '}') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or '}'", pos);
  }
  skipSpace();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return Expr{kind, CycleSet(std::move(values))};
}

std::string render(const Expr& e) {
  return (e.kind == ExprKind::Union ? "C" : "S") + e.carrier.str();
}

namespace {

std::string unionText(const CycleSet& c) { return render({ExprKind::Union, c}); }
std::string condText(const CycleSet& c) { return render({ExprKind::Cond, c}); }

std::string dotQuote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string renderHasse(const HasseGraph& graph, HasseFormat format) {
  std::ostringstream os;
  switch (format) {
    case HasseFormat::Text:
      os << "nodes " << graph.nodes.size() << '\n' << "edges " << graph.covers.size() << '\n';
      for (const auto& node : graph.nodes) os << node.label << '\n';
      for (const auto& [lo, hi] : graph.covers)
        os << graph.nodes[lo].label << " < " << graph.nodes[hi].label << '\n';
      break;
    case HasseFormat::Dot:
      os << "digraph hasse {\n";
      for (const auto& node : graph.nodes) os << "  " << dotQuote(node.label) << ";\n";
      for (const auto& [lo, hi] : graph.covers)
        os << "  " << dotQuote(graph.nodes[lo].label) << " -> " << dotQuote(graph.nodes[hi].label) << ";\n";
      os << "}\n";
      break;
    case HasseFormat::Json: {
      json nodes = json::array();
      for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const auto& node = graph.nodes[i];
        json antichain = json::array();
        for (const auto& p : node.antichain) antichain.push_back(std::vector<PosInt>(p.begin(), p.end()));
        nodes.push_back({{"id", i},
                         {"label", node.label},
                         {"representative",
                          graph.kind == HasseKind::Unions ? unionText(node.representative)
                                                          : condText(node.representative)},
                         {"antichain", antichain}});
      }
      json edges = json::array();
      for (const auto& [lo, hi] : graph.covers) edges.push_back({lo, hi});
      json doc = {{"schema", 1},
                  {"kind", graph.kind == HasseKind::Unions ? "uc" : "cond"},
                  {"nodes", nodes},
                  {"edges", edges}};
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

struct Context {
  bool json = false;
  Limits limits;
  std::ostream& out;
};

Expr expect(const std::string& text, ExprKind kind) {
  Expr e = parseExpr(text);
  if (e.kind != kind)
    throw DomainError("expected " + std::string(kind == ExprKind::Union ? "a union C{...}" : "a condition S{...}") +
                      ", got " + render(e));
  return e;
}

void emit(Context& ctx, const std::string& command, json input, json answer, json extra,
          const std::string& text) {
  if (ctx.json) {
    json doc = {{"schema", 1}, {"command", command}, {"input", std::move(input)}, {"answer", std::move(answer)}};
    if (!extra.is_null()) doc.update(extra);
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << text << '\n';
  }
}

int boolExit(bool value) { return value ? kExitYes : kExitNo; }

std::vector<PosInt> toVector(const CycleSet& c) { return {c.begin(), c.end()}; }

std::string joinTexts(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

int cmdImplies(Context& ctx, const std::vector<std::string>& args) {
  const auto colon = std::find(args.begin(), args.end(), ":");
  if (colon == args.end() || colon == args.begin() || colon + 2 != args.end())
    throw DomainError("usage: implies <cond>... : <cond>");
  std::vector<Condition> premises;
  json premiseText = json::array();
  for (auto it = args.begin(); it != colon; ++it) {
    premises.push_back(Condition{expect(*it, ExprKind::Cond).carrier});
    premiseText.push_back(condText(premises.back().carrier));
  }
  const Condition target{expect(*(colon + 1), ExprKind::Cond).carrier};
  const auto missing = setImpliesCounterexample(premises, target);
  json extra;
  std::string text = missing ? "false" : "true";
  if (missing) {
    extra = {{"witness", {{"unimplied", condText(missing->primes.asCycleSet())}}}};
    text += " (" + condText(missing->primes.asCycleSet()) + " is implied by no premise)";
  }
  emit(ctx, "implies", {{"premises", premiseText}, {"conclusion", condText(target.carrier)}}, !missing, extra, text);
  return boolExit(!missing);
}

int cmdSatisfies(Context& ctx, const std::string& u, const std::string& s) {
  const CycleSet structure = expect(u, ExprKind::Union).carrier;
  const Condition condition{expect(s, ExprKind::Cond).carrier};
  const auto witness = unsatisfyingMap(structure, condition, ctx.limits);
  json extra;
  std::string text = witness ? "false" : "true";
  if (witness) {
    json map = json::array();
    PosInt period = 1;
    std::string mapText;
    for (const auto& [b, a] : *witness) {
      map.push_back({b, a});
      period = lcm(period, dotdiv(a, b));
      mapText += (mapText.empty() ? "" : ", ") + std::to_string(b) + "->" + std::to_string(a);
    }
    extra = {{"witness", {{"map", map}, {"lcm", period}}}};
    text += " (h: " + mapText + "; lcm " + std::to_string(period) + " is a multiple of no length)";
  }
  emit(ctx, "satisfies", {{"union", unionText(structure)}, {"condition", condText(condition.carrier)}},
       !witness, extra, text);
  return boolExit(!witness);
}

int cmdCompare(Context& ctx, const std::string& lhs, const std::string& rhs) {
  const CycleSet b = expect(lhs, ExprKind::Union).carrier;
  const CycleSet c = expect(rhs, ExprKind::Union).carrier;
  const std::string symbol = toString(compare(b, c, ctx.limits));
  emit(ctx, "compare", {{"lhs", unionText(b)}, {"rhs", unionText(c)}}, symbol, nullptr, symbol);
  return kExitYes;
}

int cmdDecompose(Context& ctx, const std::string& s) {
  const Condition condition{expect(s, ExprKind::Cond).carrier};
  std::vector<std::string> parts;
  for (const auto& q : decompose(condition, ctx.limits)) parts.push_back(condText(q.primes.asCycleSet()));
  emit(ctx, "decompose", {{"condition", condText(condition.carrier)}}, parts, nullptr, joinTexts(parts));
  return kExitYes;
}

CycleSet canonicalCondition(const Condition& s, const Limits& limits) {
  if (isTrivial(s)) return CycleSet{1};
  const auto parts = decompose(s, limits);
  return conditionRepresentative(parts);
}

int cmdCanon(Context& ctx, const std::string& text) {
  const Expr e = parseExpr(text);
  const Expr result = e.kind == ExprKind::Union ? Expr{ExprKind::Union, canon(e.carrier, ctx.limits)}
                                                : Expr{ExprKind::Cond, canonicalCondition({e.carrier}, ctx.limits)};
  emit(ctx, "canon", {{"expr", render(e)}}, render(result), nullptr, render(result));
  return kExitYes;
}

int cmdNpc(Context& ctx, const std::string& u) {
  const CycleSet structure = expect(u, ExprKind::Union).carrier;
  const NpcFingerprint fingerprint = npc(structure, ctx.limits);
  std::vector<std::string> parts;
  for (const auto& p : fingerprint.maximalSets()) parts.push_back(condText(p.asCycleSet()));
  emit(ctx, "npc", {{"union", unionText(structure)}}, parts, nullptr, parts.empty() ? "(none)" : joinTexts(parts));
  return kExitYes;
}

int cmdLattice(Context& ctx, const std::string& op, const std::string& kind, const std::string& lhs,
               const std::string& rhs) {
  Expr result{ExprKind::Union, CycleSet{1}};
  if (kind == "uc") {
    const CycleSet b = expect(lhs, ExprKind::Union).carrier;
    const CycleSet c = expect(rhs, ExprKind::Union).carrier;
    result = {ExprKind::Union, op == "meet" ? ucMeet(b, c, ctx.limits) : ucJoin(b, c, ctx.limits)};
  } else {
    const Condition s{expect(lhs, ExprKind::Cond).carrier};
    const Condition t{expect(rhs, ExprKind::Cond).carrier};
    const Condition r = op == "meet" ? condMeet(s, t) : condJoin(s, t);
    result = {ExprKind::Cond, canonicalCondition(r, ctx.limits)};
  }
  emit(ctx, op, {{"kind", kind}, {"lhs", lhs}, {"rhs", rhs}}, render(result), nullptr, render(result));
  return kExitYes;
}

std::vector<PosInt> parsePrimeList(const std::string& text) {
  std::vector<PosInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("expected a comma-separated list of primes", 0);
    out.push_back(std::stoull(item));
  }
  return out;
}

int cmdHasse(Context& ctx, const std::string& primes, const std::string& kind, std::string format) {
  const PrimeSet set(parsePrimeList(primes));
  const HasseGraph graph = enumerateHasse(set, kind == "uc" ? HasseKind::Unions : HasseKind::Conditions, ctx.limits);
  if (ctx.json) format = "json";
  const HasseFormat f = format == "json" ? HasseFormat::Json : format == "dot" ? HasseFormat::Dot : HasseFormat::Text;
  ctx.out << renderHasse(graph, f);
  return kExitYes;
}

json lengthsJson(const std::vector<std::uint64_t>& lengths) { return json(lengths); }

std::string lengthsText(const std::vector<std::uint64_t>& lengths) {
  std::string out;
  for (std::size_t i = 0; i < lengths.size(); ++i) out += (i ? "," : "") + std::to_string(lengths[i]);
  return out;
}

// Sorted lengths with repetition, rendered as length:count pairs.
std::string inventoryText(const std::vector<std::uint64_t>& lengths) {
  std::string out;
  for (std::size_t i = 0; i < lengths.size();) {
    std::size_t j = i;
    while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
    out += (out.empty() ? "" : ",") + std::to_string(lengths[i]) + ":" + std::to_string(j - i);
    i = j;
  }
  return out;
}

int cmdOracle(Context& ctx, const std::string& what, const std::vector<std::string>& args) {
  if (args.size() != 2) throw DomainError("oracle " + what + " takes two expressions");
  if (what == "satisfies") {
    const CycleSet structure = expect(args[0], ExprKind::Union).carrier;
    const Condition condition{expect(args[1], ExprKind::Cond).carrier};
    const auto lengths = oracle::quotientCycleLengths(structure, condition.carrier, ctx.limits);
    const bool answer = oracle::oracleSatisfies(structure, condition, ctx.limits);
    emit(ctx, "oracle satisfies", {{"union", unionText(structure)}, {"condition", condText(condition.carrier)}},
         answer, {{"quotientCycleLengths", lengthsJson(lengths)}},
         std::string(answer ? "true" : "false") + " (quotient cycle lengths " + lengthsText(lengths) + ")");
    return boolExit(answer);
  }
  if (what == "power") {
    const CycleSet base = expect(args[0], ExprKind::Union).carrier;
    const CycleSet exponent = expect(args[1], ExprKind::Union).carrier;
    const Digraph g = oracle::powerDigraph(base, exponent, ctx.limits);
    const auto lengths = cycleLengths(g);
    emit(ctx, "oracle power", {{"base", unionText(base)}, {"exponent", unionText(exponent)}},
         {{"vertices", g.vertexCount}, {"edges", g.edges.size()}, {"cycleLengths", lengths}}, nullptr,
         "vertices " + std::to_string(g.vertexCount) + " edges " + std::to_string(g.edges.size()) +
             " cycles " + inventoryText(lengths));
    return kExitYes;
  }
  if (what == "quotient") {
    const CycleSet structure = expect(args[0], ExprKind::Union).carrier;
    const CycleSet condition = expect(args[1], ExprKind::Cond).carrier;
    const auto q = oracle::shiftQuotient(structure, condition, ctx.limits);
    const auto lengths = cycleLengths(q.quotient);
    emit(ctx, "oracle quotient", {{"union", unionText(structure)}, {"condition", condText(condition)}},
         {{"orbits", q.quotient.vertexCount}, {"cycleLengths", lengths}}, nullptr,
         "orbits " + std::to_string(q.quotient.vertexCount) + " cycles " + inventoryText(lengths));
    return kExitYes;
  }
  if (what == "free") {
    const CycleSet b = expect(args[0], ExprKind::Union).carrier;
    const CycleSet c = expect(args[1], ExprKind::Union).carrier;
    const Digraph f = oracle::freeStructure(b, c);
    const CycleSet lengths = oracle::cycleSetOf(f);
    const bool equivalent = homMaps(lengths, c) && homMaps(c, lengths);
    emit(ctx, "oracle free", {{"b", unionText(b)}, {"c", unionText(c)}},
         {{"polymorphisms", f.vertexCount}, {"cycleLengths", toVector(lengths)}, {"homEquivalentToC", equivalent}},
         nullptr,
         "polymorphisms " + std::to_string(f.vertexCount) + " cycle lengths " + lengths.str() +
             (equivalent ? " (hom-equivalent to " : " (not hom-equivalent to ") + unionText(c) + ")");
    return kExitYes;
  }
  throw DomainError("unknown oracle command " + what);
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic loop conditions and pp-constructability of unions of cycles", "cyclattice"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{false, {}, out};
  app.add_flag("--json", ctx.json, "Machine-readable JSON output");
  app.add_option("--max-vertices", ctx.limits.maxVertices, "Vertex bound for explicit constructions");
  app.add_option("--max-divisors", ctx.limits.maxDivisors, "Divisor-count bound for maximal-c enumeration");

  std::vector<std::string> rest;
  std::string a, b, kind = "uc", primes, format = "text", what;
  std::function<int()> action;

  auto* implies = app.add_subcommand("implies", "Set implication: <cond>... : <cond>");
  implies->add_option("args", rest)->required()->allow_extra_args();
  implies->callback([&] { action = [&] { return cmdImplies(ctx, rest); }; });

  auto* sat = app.add_subcommand("satisfies", "Does Pol(<union>) satisfy <cond>?");
  sat->add_option("union", a)->required();
  sat->add_option("cond", b)->required();
  sat->callback([&] { action = [&] { return cmdSatisfies(ctx, a, b); }; });

  auto* cmp = app.add_subcommand("compare", "pp-constructability order: <, >, =, ||");
  cmp->add_option("lhs", a)->required();
  cmp->add_option("rhs", b)->required();
  cmp->callback([&] { action = [&] { return cmdCompare(ctx, a, b); }; });

  auto* dec = app.add_subcommand("decompose", "Prime decomposition of a condition");
  dec->add_option("cond", a)->required();
  dec->callback([&] { action = [&] { return cmdDecompose(ctx, a); }; });

  auto* can = app.add_subcommand("canon", "Square-free canonical representative");
  can->add_option("expr", a)->required();
  can->callback([&] { action = [&] { return cmdCanon(ctx, a); }; });

  auto* np = app.add_subcommand("npc", "Maximal prime conditions not satisfied by a union");
  np->add_option("union", a)->required();
  np->callback([&] { action = [&] { return cmdNpc(ctx, a); }; });

  for (const char* op : {"meet", "join"}) {
    auto* sub = app.add_subcommand(op, std::string("Lattice ") + op);
    sub->add_option("--kind", kind)->check(CLI::IsMember({"cond", "uc"}));
    sub->add_option("lhs", a)->required();
    sub->add_option("rhs", b)->required();
    const std::string name = op;
    sub->callback([&, name] { action = [&, name] { return cmdLattice(ctx, name, kind, a, b); }; });
  }

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram over a set of at most four primes");
  hasse->add_option("--primes", primes)->required();
  hasse->add_option("--kind", kind)->check(CLI::IsMember({"cond", "uc"}));
  hasse->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
  hasse->callback([&] { action = [&] { return cmdHasse(ctx, primes, kind, format); }; });

  auto* orc = app.add_subcommand("oracle", "Brute-force digraph constructions");
  orc->add_option("what", what)->required()->check(CLI::IsMember({"satisfies", "power", "quotient", "free"}));
  orc->add_option("args", rest)->required();
  orc->callback([&] { action = [&] { return cmdOracle(ctx, what, rest); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return action ? action() : kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace cyc::cli
