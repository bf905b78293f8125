#include "inca/io/parser.h"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "inca/errors.h"

namespace inca::io {

namespace {

enum class Tok {
  kIdent,
  kNumber,
  kSection,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kComma,
  kDot,
  kColon,
  kTilde,
  kCaret,
  kPlusMinus,
  kStrictArrow,
  kDefeasibleArrow,
  kNotEqual,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLocation at;
};

bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipSpaceAndComments();
      SourceLocation at{line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", at});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back({Tok::kIdent, takeWhile(identChar), at});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Tok::kNumber, number(), at});
      } else if (c == '#') {
        advance();
        std::string name = takeWhile(identChar);
        if (name.empty()) fail(at, "expected a section name after '#'");
        out.push_back({Tok::kSection, name, at});
      } else {
        out.push_back({symbol(at), std::string(), at});
      }
    }
  }

  [[noreturn]] void fail(SourceLocation at, const std::string& message) const {
    throw ParseError(at.line, at.column, message, lineText(text_, at.line));
  }

  static std::string lineText(std::string_view text, int line) {
    int current = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size() && current < line; ++i) {
      if (text[i] == '\n') {
        ++current;
        start = i + 1;
      }
    }
    if (current != line) return "";
    std::size_t end = text.find('\n', start);
    return std::string(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  template <typename Pred>
  std::string takeWhile(Pred pred) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  bool digitAt(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  // Digits and identifier characters, optionally followed by a fraction
  // (".25") or a denominator ("/8").
  std::string number() {
    std::string out = takeWhile(identChar);
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/') && digitAt(pos_ + 1)) {
      out += text_[pos_];
      advance();
      out += takeWhile([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    }
    return out;
  }

  Tok symbol(SourceLocation at) {
    char c = text_[pos_];
    char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    auto two = [&](Tok kind) {
      advance();
      advance();
      return kind;
    };
    auto one = [&](Tok kind) {
      advance();
      return kind;
    };
    switch (c) {
      case '(':
        return one(Tok::kLParen);
      case ')':
        return one(Tok::kRParen);
      case '{':
        return one(Tok::kLBrace);
      case '}':
        return one(Tok::kRBrace);
      case ',':
        return one(Tok::kComma);
      case '.':
        return one(Tok::kDot);
      case ':':
        return one(Tok::kColon);
      case '~':
        return one(Tok::kTilde);
      case '^':
        return one(Tok::kCaret);
      case '+':
        if (next == '-') return two(Tok::kPlusMinus);
        break;
      case '<':
        if (next == '-') return two(Tok::kStrictArrow);
        break;
      case '-':
        if (next == '<') return two(Tok::kDefeasibleArrow);
        break;
      case '!':
        if (next == '=') return two(Tok::kNotEqual);
        break;
      default:
        break;
    }
    fail(at, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent:
      return "identifier";
    case Tok::kNumber:
      return "number";
    case Tok::kSection:
      return "section header";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kLBrace:
      return "'{'";
    case Tok::kRBrace:
      return "'}'";
    case Tok::kComma:
      return "','";
    case Tok::kDot:
      return "'.'";
    case Tok::kColon:
      return "':'";
    case Tok::kTilde:
      return "'~'";
    case Tok::kCaret:
      return "'^'";
    case Tok::kPlusMinus:
      return "'+-'";
    case Tok::kStrictArrow:
      return "'<-'";
    case Tok::kDefeasibleArrow:
      return "'-<'";
    case Tok::kNotEqual:
      return "'!='";
    case Tok::kEnd:
      return "end of input";
  }
  return "?";
}

enum class Section { kNone, kEm, kIc, kAm, kAf, kSorts, kUniverse };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), lexer_(text), tokens_(lexer_.run()) {}

  KBDocument document() {
    KBDocument doc;
    Section section = Section::kNone;
    while (peek().kind != Tok::kEnd) {
      if (peek().kind == Tok::kSection) {
        section = sectionNamed(take());
        if (section == Section::kUniverse && !doc.universe) doc.universe.emplace();
        continue;
      }
      switch (section) {
        case Section::kNone:
          fail(peek().at, "statement outside of a section (expected #sorts, #universe, #em, #ic, #am or #af)");
        case Section::kEm:
          doc.em.push_back(emStatement());
          break;
        case Section::kIc:
          doc.ic.push_back(icStatement());
          break;
        case Section::kAm:
          doc.am.push_back(amStatement());
          break;
        case Section::kAf:
          doc.af.push_back(afStatement());
          break;
        case Section::kSorts:
          doc.sorts.push_back(sortStatement());
          break;
        case Section::kUniverse: {
          auto atoms = groundAtomList();
          expect(Tok::kDot);
          doc.universe->insert(doc.universe->end(), atoms.begin(), atoms.end());
          break;
        }
      }
    }
    validate(doc);
    return doc;
  }

  Formula wholeFormula() {
    Formula f = formula();
    expect(Tok::kEnd);
    return f;
  }

  Literal wholeLiteral() {
    Literal l = literal();
    expect(Tok::kEnd);
    return l;
  }

  World wholeWorld() {
    if (peek().kind == Tok::kEnd) return World();
    auto atoms = groundAtomList();
    expect(Tok::kEnd);
    return World(std::move(atoms));
  }

  std::vector<attribution::EvidenceItem> evidence() {
    std::vector<attribution::EvidenceItem> out;
    while (peek().kind != Tok::kEnd) {
      attribution::EvidenceItem item;
      item.atom = atom(ModelTag::kEnvironmental, true);
      if (accept(Tok::kColon)) {
        SourceLocation p_at = peek().at;
        item.p = rational();
        expect(Tok::kPlusMinus);
        SourceLocation eps_at = peek().at;
        item.eps = rational();
        checkBounds(item.p, item.eps, p_at, eps_at);
      }
      expect(Tok::kDot);
      out.push_back(std::move(item));
    }
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  Token take() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) {
      fail(peek().at, std::string("expected ") + describe(kind) + ", found " + found(peek()));
    }
    return take();
  }

  static std::string found(const Token& t) {
    if (t.kind == Tok::kIdent || t.kind == Tok::kNumber) return "'" + t.text + "'";
    if (t.kind == Tok::kSection) return "'#" + t.text + "'";
    return describe(t.kind);
  }

  bool peekKeyword(std::string_view word, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kIdent && peek(ahead).text == word;
  }

  [[noreturn]] void fail(SourceLocation at, const std::string& message) const {
    lexer_.fail(at, message);
  }

  Section sectionNamed(const Token& t) {
    static const std::map<std::string, Section> names = {
        {"em", Section::kEm},       {"ic", Section::kIc},       {"am", Section::kAm},
        {"af", Section::kAf},       {"sorts", Section::kSorts}, {"universe", Section::kUniverse},
    };
    auto it = names.find(t.text);
    if (it == names.end()) fail(t.at, "unknown section '#" + t.text + "'");
    return it->second;
  }

  Rational rational() {
    Token t = take();
    if (t.kind != Tok::kNumber) fail(t.at, "expected a probability, found " + found(t));
    try {
      return parseRational(t.text);
    } catch (const std::invalid_argument&) {
      fail(t.at, "malformed number '" + t.text + "'");
    }
  }

  void checkBounds(const Rational& p, const Rational& eps, SourceLocation p_at,
                   SourceLocation eps_at) const {
    if (p < 0 || p > 1) fail(p_at, "probability " + formatRational(p) + " is outside [0, 1]");
    if (eps < 0 || eps > p || eps > 1 - p) {
      fail(eps_at, "error tolerance " + formatRational(eps) + " must lie in [0, min(p, 1 - p)]");
    }
  }

  Term term() {
    Token t = take();
    if (t.kind != Tok::kIdent && t.kind != Tok::kNumber) fail(t.at, "expected a term, found " + found(t));
    if (t.text.find_first_of("./") != std::string::npos) fail(t.at, "malformed term '" + t.text + "'");
    return Term::fromName(t.text);
  }

  Atom atom(ModelTag tag, bool ground) {
    Token name = take();
    if (name.kind != Tok::kIdent || !std::islower(static_cast<unsigned char>(name.text[0]))) {
      fail(name.at, "expected a predicate name, found " + found(name));
    }
    std::vector<Term> args;
    if (accept(Tok::kLParen)) {
      do {
        SourceLocation at = peek().at;
        Term t = term();
        if (ground && t.isVariable()) fail(at, "variable '" + t.name() + "' in a ground atom");
        args.push_back(std::move(t));
      } while (accept(Tok::kComma));
      expect(Tok::kRParen);
    }
    auto [it, inserted] = arity_.emplace(name.text, args.size());
    if (!inserted && it->second != args.size()) {
      fail(name.at, "predicate '" + name.text + "' used with arity " + std::to_string(args.size()) +
                        " but earlier with arity " + std::to_string(it->second));
    }
    return Atom(name.text, std::move(args), tag);
  }

  std::vector<Atom> groundAtomList() {
    std::vector<Atom> atoms{atom(ModelTag::kEnvironmental, true)};
    while (accept(Tok::kComma)) atoms.push_back(atom(ModelTag::kEnvironmental, true));
    return atoms;
  }

  // or := and {'v' and}; and := unary {'^' unary}; unary := '~' unary | primary
  Formula formula() {
    std::vector<Formula> parts{conjunction()};
    while (peekKeyword("v")) {
      take();
      parts.push_back(conjunction());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept(Tok::kCaret)) parts.push_back(unary());
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    if (accept(Tok::kTilde)) return Formula::negation(unary());
    if (accept(Tok::kLParen)) {
      Formula inner = formula();
      expect(Tok::kRParen);
      return inner;
    }
    if (peekKeyword("true")) {
      take();
      return Formula::top();
    }
    if (peekKeyword("false")) {
      take();
      return Formula::bottom();
    }
    if (peekKeyword("v")) fail(peek().at, "expected a formula, found 'v'");
    return Formula::atom(atom(ModelTag::kEnvironmental, true));
  }

  Literal literal() {
    bool negated = false;
    if (peekKeyword("neg") && peek(1).kind == Tok::kIdent) {
      take();
      negated = true;
    }
    return Literal(atom(ModelTag::kAnalytical, false), negated);
  }

  EMStatement emStatement() {
    EMStatement s;
    s.location = peek().at;
    s.formula = formula();
    expect(Tok::kColon);
    SourceLocation p_at = peek().at;
    s.p = rational();
    expect(Tok::kPlusMinus);
    SourceLocation eps_at = peek().at;
    s.eps = rational();
    checkBounds(s.p, s.eps, p_at, eps_at);
    expect(Tok::kDot);
    return s;
  }

  ICStatement icStatement() {
    ICStatement s;
    s.location = peek().at;
    if (!peekKeyword("oneOf")) fail(peek().at, "expected oneOf{...}, found " + found(peek()));
    take();
    expect(Tok::kLBrace);
    s.atoms = groundAtomList();
    expect(Tok::kRBrace);
    expect(Tok::kDot);
    std::set<Atom> distinct(s.atoms.begin(), s.atoms.end());
    if (distinct.size() < 2) fail(s.location, "oneOf needs at least two distinct atoms");
    return s;
  }

  std::string label() {
    Token t = take();
    if (t.kind != Tok::kIdent && t.kind != Tok::kNumber) fail(t.at, "expected a label, found " + found(t));
    return t.text;
  }

  AMStatement amStatement() {
    AMStatement s;
    s.location = peek().at;
    s.label = label();
    if (!labels_.insert(s.label).second) fail(s.location, "duplicate label '" + s.label + "'");
    expect(Tok::kColon);
    bool keyword_follows = peek(1).kind == Tok::kIdent;
    SourceLocation head_at = keyword_follows ? peek(1).at : peek().at;
    if (peekKeyword("fact") && keyword_follows) {
      take();
      s.kind = am::ElementKind::kFact;
      s.shape.head = literal();
    } else if (peekKeyword("presume") && keyword_follows) {
      take();
      s.kind = am::ElementKind::kPresumption;
      s.shape.head = literal();
    } else {
      s.shape.head = literal();
      if (accept(Tok::kStrictArrow)) {
        s.kind = am::ElementKind::kStrictRule;
      } else if (accept(Tok::kDefeasibleArrow)) {
        s.kind = am::ElementKind::kDefeasibleRule;
      } else {
        fail(peek().at, "expected '<-' or '-<', found " + found(peek()));
      }
      do {
        if (peek(1).kind == Tok::kNotEqual) {
          Term lhs = term();
          take();
          Term rhs = term();
          s.shape.guards.push_back({lhs, rhs});
        } else {
          s.shape.body.push_back(literal());
        }
      } while (accept(Tok::kComma));
      if (s.shape.body.empty()) fail(s.location, "a rule needs at least one body literal");
    }
    expect(Tok::kDot);
    if (s.kind == am::ElementKind::kFact && s.shape.head.atom().predicate() == "condOp") {
      fail(head_at, "condOp literals must be defeasible; '" + s.label + "' states one as a fact");
    }
    return s;
  }

  AFStatement afStatement() {
    AFStatement s;
    s.location = peek().at;
    s.label = label();
    expect(Tok::kColon);
    s.formula = formula();
    expect(Tok::kDot);
    return s;
  }

  SortStatement sortStatement() {
    SortStatement s;
    s.location = peek().at;
    Token kind = take();
    if (kind.kind == Tok::kIdent && kind.text == "actor") {
      s.role = Role::kActor;
    } else if (kind.kind == Tok::kIdent && kind.text == "operation") {
      s.role = Role::kOperation;
    } else if (kind.kind == Tok::kIdent && kind.text == "constant") {
      s.role = Role::kPlain;
    } else {
      fail(kind.at, "expected actor, operation or constant, found " + found(kind));
    }
    do {
      SourceLocation at = peek().at;
      Term t = term();
      if (t.isVariable()) fail(at, "'" + t.name() + "' is a variable, not a constant");
      s.constants.push_back(t.name());
    } while (accept(Tok::kComma));
    expect(Tok::kDot);
    return s;
  }

  void validate(const KBDocument& doc) const {
    std::set<std::string> annotated;
    for (const auto& s : doc.af) {
      if (!labels_.count(s.label)) fail(s.location, "annotation for unknown label '" + s.label + "'");
      if (!annotated.insert(s.label).second) {
        fail(s.location, "label '" + s.label + "' is annotated twice");
      }
    }
    std::map<std::string, Role> roles;
    for (const auto& s : doc.sorts) {
      for (const auto& c : s.constants) {
        auto [it, inserted] = roles.emplace(c, s.role);
        if (!inserted && it->second != s.role && it->second != Role::kPlain && s.role != Role::kPlain) {
          fail(s.location, "constant '" + c + "' declared both " + roleName(it->second) + " and " +
                               roleName(s.role));
        }
      }
    }
  }

  std::string_view text_;
  Lexer lexer_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::map<std::string, std::size_t> arity_;
  std::set<std::string> labels_;
};

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot read " + path.string(), "");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

KBDocument parseKB(std::string_view text) { return Parser(text).document(); }

KBDocument loadKB(const std::filesystem::path& path) { return parseKB(readFile(path)); }

Formula parseFormula(std::string_view text) { return Parser(text).wholeFormula(); }

Literal parseLiteral(std::string_view text) {
  Literal l = Parser(text).wholeLiteral();
  if (!l.isGround()) throw GroundednessError("literal " + l.toString() + " is not ground");
  return l;
}

World parseWorldSpec(std::string_view text) { return Parser(text).wholeWorld(); }

std::vector<attribution::EvidenceItem> parseEvidence(std::string_view text) {
  return Parser(text).evidence();
}

std::vector<attribution::EvidenceItem> loadEvidence(const std::filesystem::path& path) {
  return parseEvidence(readFile(path));
}

}  // namespace inca::io
