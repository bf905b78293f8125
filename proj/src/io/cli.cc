#include "inca/io/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include "inca/attribution/attribution.h"
#include "inca/errors.h"
#include "inca/io/assemble.h"
#include "inca/io/json_output.h"
#include "inca/io/parser.h"

namespace inca::io {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  bool json = false;
  std::size_t max_atoms = 20;
  std::string poss_mode = "derivable";
  std::string query;
  std::string literal;
  std::optional<std::string> world;
  std::string operation;
  std::vector<std::string> suspects;
  std::string evidence_file;
  std::string order = "midpoint";
};

// Parse error in a command-line item rather than the knowledge-base file.
class ArgumentParseError : public ParseError {
 public:
  ArgumentParseError(std::string option, const ParseError& e)
      : ParseError(e.line(), e.column(), e.message(), e.snippet()), option_(std::move(option)) {}
  const std::string& option() const { return option_; }

 private:
  std::string option_;
};

template <typename F>
auto parseArgument(const std::string& option, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw ArgumentParseError(option, e);
  }
}

class Session {
 public:
  Session(const Options& options, std::ostream& out) : options_(options), out_(out) {}

  void check() {
    KBDocument doc = loadKB(options_.file);
    auto fw = framework(doc);
    bool consistent = fw.engine().isConsistent();
    if (options_.json) {
      emit({{"query", {{"command", "check"}}},
            {"result", consistent ? "consistent" : "inconsistent"},
            {"counts",
             {{"formulas", fw.em().formulas().size()},
              {"constraints", fw.em().constraints().size()},
              {"elements", fw.am().size()},
              {"arguments", fw.reasoner().arguments().size()},
              {"worlds", fw.worlds().size()}}}});
    } else {
      out_ << "formulas: " << fw.em().formulas().size() << "\n"
           << "constraints: " << fw.em().constraints().size() << "\n"
           << "elements: " << fw.am().size() << "\n"
           << "arguments: " << fw.reasoner().arguments().size() << "\n"
           << "worlds: " << fw.worlds().size() << "\n"
           << (consistent ? "consistent" : "inconsistent") << "\n";
    }
    if (!consistent) throw InconsistentKBError("the environmental model is inconsistent");
  }

  void worlds() {
    auto fw = framework(loadKB(options_.file));
    const auto& space = fw.worlds();
    if (options_.json) {
      json list = json::array();
      for (std::size_t i = 0; i < space.size(); ++i) list.push_back(worldJson(space.world(i)));
      emit({{"query", {{"command", "worlds"}}}, {"result", space.size()}, {"worlds", list}});
      return;
    }
    for (std::size_t i = 0; i < space.size(); ++i) {
      out_ << "w" << i + 1 << " = " << space.world(i).toString() << "\n";
    }
  }

  void entail() {
    auto fw = framework(loadKB(options_.file));
    Formula q = parseArgument("-q", [&] { return parseFormula(options_.query); });
    auto interval = fw.engine().bounds(q);
    report({{"command", "entail"}, {"formula", q.toString()}}, interval);
  }

  void args() {
    auto fw = framework(loadKB(options_.file));
    const auto& r = fw.reasoner();
    std::vector<am::ArgumentId> ids;
    if (options_.literal.empty()) {
      for (am::ArgumentId a = 0; a < r.arguments().size(); ++a) ids.push_back(a);
    } else {
      ids = r.argumentsFor(literal());
    }
    if (options_.json) {
      json list = json::array();
      for (auto a : ids) list.push_back(argumentJson(r, a));
      emit({{"query", {{"command", "args"}, {"literal", options_.literal}}}, {"result", list}});
      return;
    }
    for (auto a : ids) out_ << r.label(a) << " " << r.describe(a) << "\n";
  }

  void warrant() {
    auto fw = framework(loadKB(options_.file));
    Literal l = literal();
    const auto& r = fw.reasoner();
    am::WarrantStatus status;
    json forest;
    if (options_.world) {
      World w = world(fw);
      bool yes = fw.warrantsIn(w, l);
      bool no = fw.warrantsIn(w, complement(l));
      if (yes && no) throw InternalInconsistencyError("both " + l.toString() + " and its complement are warranted");
      status = yes ? am::WarrantStatus::kWarranted
                   : (no ? am::WarrantStatus::kNotWarranted : am::WarrantStatus::kUndecided);
      forest = forestJson(r, *fw.forestIn(l, w));
    } else {
      status = am::warrantStatus(r, l);
      forest = forestJson(r, am::buildForest(r, l));
    }
    if (options_.json) {
      json query = {{"command", "warrant"}, {"literal", l.toString()}};
      if (options_.world) query["world"] = *options_.world;
      emit({{"query", query}, {"result", am::warrantStatusName(status)}, {"forest", forest}});
      return;
    }
    out_ << am::warrantStatusName(status) << "\n";
  }

  void scenarios(bool necessary) {
    auto fw = framework(loadKB(options_.file));
    Literal l = literal();
    auto worlds = necessary ? bridge::necSet(fw, l) : bridge::possSet(fw, l);
    if (options_.json) {
      json list = json::array();
      for (const auto& w : worlds) list.push_back(worldJson(w));
      emit({{"query", {{"command", necessary ? "nec" : "poss"}, {"literal", l.toString()}}},
            {"result", worlds.size()},
            {"worlds", list}});
      return;
    }
    if (worlds.empty()) out_ << "none\n";
    for (const auto& w : worlds) out_ << w.toString() << "\n";
  }

  void bounds() {
    auto fw = framework(loadKB(options_.file));
    Literal l = literal();
    report({{"command", "bounds"}, {"literal", l.toString()}}, bridge::probBounds(l, fw));
  }

  void attribute() {
    auto fw = framework(loadKB(options_.file));
    attribution::AttributionQuery q;
    q.suspects = options_.suspects;
    q.operation = options_.operation;
    if (!options_.evidence_file.empty()) q.evidence = loadEvidence(options_.evidence_file);
    q.order = options_.order == "dominance" ? attribution::IntervalOrder::kLowerBoundDominance
                                            : attribution::IntervalOrder::kMidpoint;
    auto answer = attribution::mostProbableSuspects(fw, q);
    if (options_.json) {
      json evidence = json::array();
      for (const auto& e : q.evidence) {
        evidence.push_back({{"atom", e.atom.toString()},
                            {"p", formatRational(e.p)},
                            {"eps", formatRational(e.eps)}});
      }
      json doc = attributionJson(fw.reasoner(), answer);
      doc["query"] = {{"command", "attribute"},
                      {"operation", q.operation},
                      {"suspects", q.suspects},
                      {"evidence", evidence},
                      {"order", options_.order}};
      doc["result"] = answer.most_probable;
      emit(doc);
      return;
    }
    out_ << "most probable:";
    for (const auto& s : answer.most_probable) out_ << " " << s;
    out_ << "\n";
    for (const auto& r : answer.per_suspect) {
      out_ << r.actor << ": " << r.interval.toString() << " [" << formatRational(r.interval.lower)
           << ", " << formatRational(r.interval.upper) << "]\n";
    }
  }

  void explain() {
    auto fw = framework(loadKB(options_.file));
    Literal l = literal();
    World w = world(fw);
    auto forest = fw.forestIn(l, w);
    bool yes = am::warrants(*forest);
    const auto& r = fw.reasoner();
    if (options_.json) {
      emit({{"query", {{"command", "explain"}, {"literal", l.toString()}, {"world", *options_.world}}},
            {"result", yes ? "warranted" : "not warranted"},
            {"worlds", json::array({worldJson(w)})},
            {"forest", forestJson(r, *forest)}});
      return;
    }
    out_ << "world: " << w.toString() << "\n";
    out_ << l.toString() << ": " << (yes ? "warranted" : "not warranted") << "\n";
    if (forest->trees.empty()) out_ << "no valid arguments\n";
    for (const auto& t : forest->trees) printNode(r, t.root, 0);
  }

 private:
  bridge::InCAFramework framework(const KBDocument& doc) const {
    bridge::FrameworkOptions options;
    options.entailment.max_atoms = options_.max_atoms;
    options.poss = options_.poss_mode == "complement" ? bridge::PossSemantics::kComplement
                                                      : bridge::PossSemantics::kDerivable;
    return assemble(doc, options);
  }

  Literal literal() const {
    return parseArgument("-l", [&] { return parseLiteral(options_.literal); });
  }

  World world(const bridge::InCAFramework& fw) const {
    World w = parseArgument("-w", [&] { return parseWorldSpec(*options_.world); });
    for (const auto& a : w.atoms()) {
      if (!fw.em().inUniverse(a)) {
        throw GroundednessError("-w: atom " + a.toString() + " is outside the atom universe");
      }
    }
    if (!fw.worlds().indexOf(w)) {
      throw Error("-w: world " + w.toString() + " violates an integrity constraint");
    }
    return w;
  }

  void printNode(const am::Reasoner& r, const am::DialecticalNode& node, int depth) {
    out_ << std::string(2 * static_cast<std::size_t>(depth), ' ') << r.label(node.argument) << " "
         << r.describe(node.argument);
    if (node.defeat_kind) out_ << " " << am::defeatKindName(*node.defeat_kind);
    out_ << " " << am::markName(node.mark) << "\n";
    for (const auto& c : node.children) printNode(r, c, depth + 1);
  }

  void report(json query, const em::ProbabilityInterval& interval) {
    if (options_.json) {
      emit({{"query", std::move(query)}, {"result", interval.toString()}, {"interval", intervalJson(interval)}});
      return;
    }
    out_ << interval.toString() << "\n";
  }

  void emit(const json& doc) { out_ << doc.dump(2) << "\n"; }

  const Options& options_;
  std::ostream& out_;
};

void printError(std::ostream& err, const std::string& file, const std::exception& e) {
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err << "error: ";
    if (p->line() > 0) {
      const auto* a = dynamic_cast<const ArgumentParseError*>(p);
      err << (a ? a->option() : file) << ":" << p->line() << ":" << p->column() << ": " << p->message() << "\n";
      if (!p->snippet().empty()) {
        err << "  " << p->snippet() << "\n  " << std::string(static_cast<std::size_t>(std::max(p->column() - 1, 0)), ' ')
            << "^\n";
      }
    } else {
      err << p->message() << "\n";
    }
    return;
  }
  err << "error: " << e.what() << "\n";
  if (const auto* c = dynamic_cast<const InconsistentEvidenceError*>(&e)) {
    for (const auto& f : c->conflict()) err << "  conflicting: " << f << "\n";
  }
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic argumentation engine for attribution queries", "inca"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print results as JSON");
  app.add_option("--max-atoms", o.max_atoms, "Largest environmental atom universe to enumerate")
      ->check(CLI::Range(0, 31));
  app.add_option("--poss-mode", o.poss_mode, "derivable (default) or complement")
      ->check(CLI::IsMember({"derivable", "complement"}));

  auto sub = [&](const char* name, const char* description) {
    auto* s = app.add_subcommand(name, description);
    s->add_option("file", o.file, "Knowledge-base file")->required();
    return s;
  };
  auto* check = sub("check", "Parse, ground and check consistency");
  auto* worlds = sub("worlds", "List the conforming environmental worlds");
  auto* entail = sub("entail", "Tightest probability interval for an environmental formula");
  entail->add_option("-q,--query", o.query, "Environmental formula")->required();
  auto* args_cmd = sub("args", "List arguments (for one literal with -l)");
  args_cmd->add_option("-l,--literal", o.literal, "Ground analytical literal");
  auto* warrant = sub("warrant", "Warrant status of a literal");
  warrant->add_option("-l,--literal", o.literal, "Ground analytical literal")->required();
  warrant->add_option("-w,--world", o.world, "World as comma-separated atoms");
  auto* nec = sub("nec", "Worlds in which the literal is warranted");
  nec->add_option("-l,--literal", o.literal, "Ground analytical literal")->required();
  auto* poss = sub("poss", "Worlds in which the literal can hold");
  poss->add_option("-l,--literal", o.literal, "Ground analytical literal")->required();
  auto* bounds = sub("bounds", "Probability bounds of an analytical literal");
  bounds->add_option("-l,--literal", o.literal, "Ground analytical literal")->required();
  auto* attribute = sub("attribute", "Most probable suspects for an operation");
  attribute->add_option("--op", o.operation, "Operation constant")->required();
  attribute->add_option("--suspects", o.suspects, "Comma-separated actor constants")
      ->required()
      ->delimiter(',');
  attribute->add_option("--evidence", o.evidence_file, "Evidence file");
  attribute->add_option("--order", o.order, "midpoint (default) or dominance")
      ->check(CLI::IsMember({"midpoint", "dominance"}));
  auto* explain = sub("explain", "Marked dialectical forest of a literal in one world");
  explain->add_option("-l,--literal", o.literal, "Ground analytical literal")->required();
  explain->add_option("-w,--world", o.world, "World as comma-separated atoms")->required();

  std::vector<const char*> argv{"inca"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Session session(o, out);
  try {
    if (*check) session.check();
    if (*worlds) session.worlds();
    if (*entail) session.entail();
    if (*args_cmd) session.args();
    if (*warrant) session.warrant();
    if (*nec) session.scenarios(true);
    if (*poss) session.scenarios(false);
    if (*bounds) session.bounds();
    if (*attribute) session.attribute();
    if (*explain) session.explain();
  } catch (const Error& e) {
    printError(err, o.file, e);
    return 1;
  } catch (const std::invalid_argument& e) {
    printError(err, o.file, e);
    return 1;
  }
  return 0;
}

}  // namespace inca::io
