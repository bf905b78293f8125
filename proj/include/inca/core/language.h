#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace inca {

// Which of the two models an atom belongs to. The environmental and
// analytical models use disjoint predicate vocabularies.
enum class ModelTag { kEnvironmental, kAnalytical };

class Term {
 public:
  enum class Kind { kVariable, kConstant };

  Term() = default;
  static Term variable(std::string name);
  static Term constant(std::string name);
  // Classifies by the first character: uppercase is a variable,
  // lowercase or digit a constant. Throws std::invalid_argument otherwise.
  static Term fromName(std::string name);

  Kind kind() const { return kind_; }
  bool isVariable() const { return kind_ == Kind::kVariable; }
  bool isConstant() const { return kind_ == Kind::kConstant; }
  const std::string& name() const { return name_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_ = Kind::kConstant;
  std::string name_;
};

class Atom {
 public:
  Atom() = default;
  Atom(std::string predicate, std::vector<Term> args,
       ModelTag tag = ModelTag::kEnvironmental)
      : predicate_(std::move(predicate)), args_(std::move(args)), tag_(tag) {}

  const std::string& predicate() const { return predicate_; }
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }
  ModelTag tag() const { return tag_; }
  bool isGround() const;

  // pred(a,b) or pred for arity zero.
  std::string toString() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string predicate_;
  std::vector<Term> args_;
  ModelTag tag_ = ModelTag::kEnvironmental;
};

// Analytical-model literal; `negated` is strong negation.
class Literal {
 public:
  Literal() = default;
  explicit Literal(Atom atom, bool negated = false)
      : atom_(std::move(atom)), negated_(negated) {}

  const Atom& atom() const { return atom_; }
  bool negated() const { return negated_; }
  bool isGround() const { return atom_.isGround(); }

  // Rendered in knowledge-base syntax: "neg p(a)" for negated literals.
  std::string toString() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  Atom atom_;
  bool negated_ = false;
};

Literal complement(const Literal& literal);

std::ostream& operator<<(std::ostream& os, const Term& term);
std::ostream& operator<<(std::ostream& os, const Atom& atom);
std::ostream& operator<<(std::ostream& os, const Literal& literal);

}  // namespace inca

template <>
struct std::hash<inca::Atom> {
  std::size_t operator()(const inca::Atom& atom) const noexcept;
};

template <>
struct std::hash<inca::Literal> {
  std::size_t operator()(const inca::Literal& literal) const noexcept;
};
