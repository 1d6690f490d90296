#pragma once

// Rotation-program language: tokens, AST, evaluator and trace rendering.
//
//   program    := statement (( ";" | NEWLINE ) statement)* ;
//   statement  := "convention" ("right"|"left")
//               | "state" (named | "(" complex "," complex ")" | "bloch" "(" angle "," angle ")")
//               | "rot" axis angle
//               | "euler" "(" angle "," angle "," angle ")" ("intrinsic"|"extrinsic")
//               | "measure" axis | "collapse" ("+"|"-")
//               | "audit" | "emit" ("state"|"bloch"|"operator"|"all") ;
//   axis       := "x" | "y" | "z" | "n" "(" angle "," angle ")" | "v" "(" number "," number "," number ")" ;
//   angle      := number ("deg"|"rad") ;
//   named      := "up" | "down" | "x+" | "x-" | "y+" | "y-" ;
//
// Comments run from '#' to the end of the line.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rotor/measurement.hpp"
#include "rotor/rotation.hpp"
#include "rotor/su2.hpp"

namespace rotor::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;
};

enum class TokenKind {
  Ident,
  Number,
  Unit,   // "deg" or "rad" attached to the preceding number
  Imag,   // number with an attached "i"
  LParen,
  RParen,
  Comma,
  Semicolon,
  Newline,
  Plus,
  Minus,
  End,
};

std::string_view to_string(TokenKind k);

struct Token {
  TokenKind kind;
  std::string text;
  double value = 0.0;  // Number and Imag
  SourcePos pos;
};

class LexError : public std::runtime_error {
 public:
  LexError(SourcePos pos, const std::string& what);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class ParseError : public std::runtime_error {
 public:
  // code is "ParseError", "EmptyProgram" or "NonUnitAxis".
  ParseError(std::string code, SourcePos pos, const std::string& what,
             std::vector<std::string> expected = {});
  const std::string& code() const { return code_; }
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string code_;
  SourcePos pos_;
  std::vector<std::string> expected_;
};

std::vector<Token> tokenize(std::string_view source);

struct AxisSpec {
  enum class Form { X, Y, Z, Spherical, Vector };
  Form form = Form::Z;
  // Spherical: (theta, phi) in radians. Vector: the literal components.
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Axis axis = Axis::unit_z();

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

enum class NamedState { Up, Down, XPlus, XMinus, YPlus, YMinus };

struct SetConvention {
  Convention convention;
  friend bool operator==(const SetConvention&, const SetConvention&) = default;
};

struct SetState {
  enum class Form { Named, Amplitudes, Bloch };
  Form form = Form::Named;
  NamedState named = NamedState::Up;
  Complex up;        // raw literal, normalized at evaluation
  Complex down;
  double theta = 0;  // Bloch form, radians
  double phi = 0;
  friend bool operator==(const SetState&, const SetState&) = default;
};

struct Rot {
  AxisSpec axis;
  double angle = 0.0;
  friend bool operator==(const Rot&, const Rot&) = default;
};

struct Euler {
  EulerZYZ angles;
  EulerMode mode = EulerMode::Intrinsic;
  friend bool operator==(const Euler&, const Euler&) = default;
};

struct Measure {
  AxisSpec axis;
  friend bool operator==(const Measure&, const Measure&) = default;
};

struct Collapse {
  Branch branch = Branch::Plus;
  friend bool operator==(const Collapse&, const Collapse&) = default;
};

struct Audit {
  friend bool operator==(const Audit&, const Audit&) = default;
};

enum class EmitWhat { State, Bloch, Operator, All };

struct Emit {
  EmitWhat what = EmitWhat::All;
  friend bool operator==(const Emit&, const Emit&) = default;
};

using StatementBody = std::variant<SetConvention, SetState, Rot, Euler, Measure, Collapse, Audit, Emit>;

struct Statement {
  StatementBody body;
  SourcePos pos;

  // Positions are not part of the tree.
  friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

Program parse(std::span<const Token> tokens);
Program parse_source(std::string_view source);

// Canonical source text; parse_source(to_source(p)) == p.
std::string to_source(const Statement& s);
std::string to_source(const Program& p);

// Parses a single complex literal such as "0.5-0.5i", "-i" or "1".
Complex parse_complex_literal(std::string_view text);

class EvalError : public std::runtime_error {
 public:
  EvalError(std::size_t statement, SourcePos pos, const std::string& what);
  std::size_t statement() const { return statement_; }
  SourcePos pos() const { return pos_; }

 private:
  std::size_t statement_;
  SourcePos pos_;
};

// The evaluator lost the unit norm or the SU(2) property of its operator.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EvalOptions {
  Convention convention = Convention::PaperRight;
};

struct Snapshot {
  Spinor state;      // canonical phase
  Vec3 bloch;
  Matrix2 op;        // state == op * initial state, for rotations only
  Convention convention = Convention::PaperRight;
};

struct StepRecord {
  std::size_t index = 0;
  SourcePos pos;
  std::string source;
  Snapshot snapshot;
  std::optional<Convention> convention_set;
  std::optional<Axis> device;
  std::optional<MeasurementResult> measurement;
  std::optional<AuditReport> audit;
  std::optional<EmitWhat> emit;
};

struct EvalTrace {
  Convention initial_convention = Convention::PaperRight;
  Snapshot initial;
  std::vector<StepRecord> steps;

  const Snapshot& final_snapshot() const { return steps.empty() ? initial : steps.back().snapshot; }
};

EvalTrace evaluate(const Program& p, const EvalOptions& options = {});

enum class Format { Text, Json };

std::string render(const EvalTrace& trace, Format format);

}  // namespace rotor::dsl
