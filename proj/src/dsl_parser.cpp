#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rotor/dsl.hpp"

namespace rotor::dsl {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;
constexpr double kVectorAxisTolerance = 1e-6;

std::string located(SourcePos pos, const std::string& what) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": " << what;
  return os.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::End) {
      throw std::invalid_argument("token list must end with an End token");
    }
  }

  Program program() {
    Program p;
    skip_separators();
    while (peek().kind != TokenKind::End) {
      p.statements.push_back(statement());
      const Token& t = peek();
      if (t.kind != TokenKind::Semicolon && t.kind != TokenKind::Newline &&
          t.kind != TokenKind::End) {
        fail(t, {"';'", "NEWLINE", "end of input"});
      }
      skip_separators();
    }
    if (p.statements.empty()) {
      throw ParseError("EmptyProgram", peek().pos, "program has no statements");
    }
    return p;
  }

  Complex lone_complex() {
    const Complex c = complex_literal();
    if (peek().kind != TokenKind::End) fail(peek(), {"end of input"});
    return c;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) const {
    std::string found = t.kind == TokenKind::End ? "end of input"
                                                 : std::string(to_string(t.kind)) + " '" + t.text + "'";
    const std::string message = "unexpected " + found + ", expected " + join(expected);
    throw ParseError("ParseError", t.pos, message, std::move(expected));
  }

  void skip_separators() {
    while (peek().kind == TokenKind::Semicolon || peek().kind == TokenKind::Newline) next();
  }

  const Token& expect(TokenKind kind) {
    if (peek().kind != kind) fail(peek(), {std::string(to_string(kind))});
    return next();
  }

  bool is_word(std::string_view w) const {
    return peek().kind == TokenKind::Ident && peek().text == w;
  }

  std::string word(std::vector<std::string> choices) {
    const Token& t = peek();
    if (t.kind == TokenKind::Ident) {
      for (const auto& c : choices) {
        if (t.text == c) {
          next();
          return c;
        }
      }
    }
    for (auto& c : choices) c = "'" + c + "'";
    fail(t, std::move(choices));
  }

  double signed_number() {
    double sign = 1.0;
    if (peek().kind == TokenKind::Minus) {
      next();
      sign = -1.0;
    } else if (peek().kind == TokenKind::Plus) {
      next();
    }
    return sign * expect(TokenKind::Number).value;
  }

  double angle() {
    double sign = 1.0;
    if (peek().kind == TokenKind::Minus) {
      next();
      sign = -1.0;
    } else if (peek().kind == TokenKind::Plus) {
      next();
    }
    if (peek().kind != TokenKind::Number) fail(peek(), {"NUMBER"});
    const double v = sign * next().value;
    std::string unit;
    if (peek().kind == TokenKind::Unit ||
        (peek().kind == TokenKind::Ident && (peek().text == "deg" || peek().text == "rad"))) {
      unit = next().text;
    } else {
      fail(peek(), {"'deg'", "'rad'"});
    }
    return unit == "deg" ? v * kDegree : v;
  }

  // term := NUMBER | IMAG | "i"
  Complex complex_term() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number) return next().value;
    if (t.kind == TokenKind::Imag) return Complex(0.0, next().value);
    if (t.kind == TokenKind::Ident && t.text == "i") {
      next();
      return kI;
    }
    fail(t, {"NUMBER", "IMAG", "'i'"});
  }

  Complex complex_literal() {
    Complex value = 0.0;
    double sign = 1.0;
    if (peek().kind == TokenKind::Minus) {
      next();
      sign = -1.0;
    } else if (peek().kind == TokenKind::Plus) {
      next();
    }
    value = sign * complex_term();
    if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const double s = next().kind == TokenKind::Minus ? -1.0 : 1.0;
      value += s * complex_term();
    }
    return value;
  }

  AxisSpec axis() {
    const Token& t = peek();
    AxisSpec spec;
    if (t.kind == TokenKind::Ident) {
      if (t.text == "x" || t.text == "y" || t.text == "z") {
        next();
        spec.form = t.text == "x" ? AxisSpec::Form::X
                    : t.text == "y" ? AxisSpec::Form::Y
                                    : AxisSpec::Form::Z;
        spec.axis = t.text == "x" ? Axis::unit_x() : t.text == "y" ? Axis::unit_y() : Axis::unit_z();
        return spec;
      }
      if (t.text == "n") {
        next();
        expect(TokenKind::LParen);
        spec.form = AxisSpec::Form::Spherical;
        spec.a = angle();
        expect(TokenKind::Comma);
        spec.b = angle();
        expect(TokenKind::RParen);
        spec.axis = to_axis({spec.a, spec.b});
        return spec;
      }
      if (t.text == "v") {
        const SourcePos at = t.pos;
        next();
        expect(TokenKind::LParen);
        spec.form = AxisSpec::Form::Vector;
        spec.a = signed_number();
        expect(TokenKind::Comma);
        spec.b = signed_number();
        expect(TokenKind::Comma);
        spec.c = signed_number();
        expect(TokenKind::RParen);
        const Vec3 v{spec.a, spec.b, spec.c};
        const double n = v.norm();
        if (!(std::abs(n - 1.0) <= kVectorAxisTolerance)) {
          std::ostringstream os;
          os << "axis vector has length " << n << ", off unit length by more than "
             << kVectorAxisTolerance;
          throw ParseError("NonUnitAxis", at, os.str());
        }
        spec.axis = Axis::normalized(v);
        return spec;
      }
    }
    fail(t, {"'x'", "'y'", "'z'", "'n'", "'v'"});
  }

  Statement statement() {
    const Token& head = peek();
    Statement st;
    st.pos = head.pos;
    if (head.kind != TokenKind::Ident) {
      fail(head, {"'convention'", "'state'", "'rot'", "'euler'", "'measure'", "'collapse'",
                  "'audit'", "'emit'"});
    }
    const std::string kw = head.text;
    if (kw == "convention") {
      next();
      const std::string w = word({"right", "left"});
      st.body = SetConvention{w == "right" ? Convention::PaperRight : Convention::TextbookLeft};
    } else if (kw == "state") {
      next();
      st.body = state_body();
    } else if (kw == "rot") {
      next();
      Rot r;
      r.axis = axis();
      r.angle = angle();
      st.body = r;
    } else if (kw == "euler") {
      next();
      Euler e;
      expect(TokenKind::LParen);
      e.angles.alpha = angle();
      expect(TokenKind::Comma);
      e.angles.beta = angle();
      expect(TokenKind::Comma);
      e.angles.gamma = angle();
      expect(TokenKind::RParen);
      e.mode = word({"intrinsic", "extrinsic"}) == "intrinsic" ? EulerMode::Intrinsic
                                                              : EulerMode::Extrinsic;
      st.body = e;
    } else if (kw == "measure") {
      next();
      st.body = Measure{axis()};
    } else if (kw == "collapse") {
      next();
      if (peek().kind == TokenKind::Plus) {
        next();
        st.body = Collapse{Branch::Plus};
      } else if (peek().kind == TokenKind::Minus) {
        next();
        st.body = Collapse{Branch::Minus};
      } else {
        fail(peek(), {"'+'", "'-'"});
      }
    } else if (kw == "audit") {
      next();
      st.body = Audit{};
    } else if (kw == "emit") {
      next();
      const std::string w = word({"state", "bloch", "operator", "all"});
      st.body = Emit{w == "state"      ? EmitWhat::State
                     : w == "bloch"    ? EmitWhat::Bloch
                     : w == "operator" ? EmitWhat::Operator
                                       : EmitWhat::All};
    } else {
      fail(head, {"'convention'", "'state'", "'rot'", "'euler'", "'measure'", "'collapse'",
                  "'audit'", "'emit'"});
    }
    return st;
  }

  SetState state_body() {
    SetState s;
    const Token& t = peek();
    if (t.kind == TokenKind::LParen) {
      next();
      s.form = SetState::Form::Amplitudes;
      s.up = complex_literal();
      expect(TokenKind::Comma);
      s.down = complex_literal();
      expect(TokenKind::RParen);
      return s;
    }
    if (is_word("bloch")) {
      next();
      s.form = SetState::Form::Bloch;
      expect(TokenKind::LParen);
      s.theta = angle();
      expect(TokenKind::Comma);
      s.phi = angle();
      expect(TokenKind::RParen);
      return s;
    }
    s.form = SetState::Form::Named;
    if (is_word("up")) {
      next();
      s.named = NamedState::Up;
      return s;
    }
    if (is_word("down")) {
      next();
      s.named = NamedState::Down;
      return s;
    }
    if (is_word("x") || is_word("y")) {
      const bool is_x = next().text == "x";
      if (peek().kind == TokenKind::Plus) {
        next();
        s.named = is_x ? NamedState::XPlus : NamedState::YPlus;
        return s;
      }
      if (peek().kind == TokenKind::Minus) {
        next();
        s.named = is_x ? NamedState::XMinus : NamedState::YMinus;
        return s;
      }
      fail(peek(), {"'+'", "'-'"});
    }
    fail(t, {"'up'", "'down'", "'x+'", "'x-'", "'y+'", "'y-'", "'('", "'bloch'"});
  }

  std::span<const Token> toks_;
  std::size_t i_ = 0;
};

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string radians(double v) { return number(v) + "rad"; }

std::string complex_text(Complex c) {
  std::string im = number(std::abs(c.imag()));
  return number(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + im + "i";
}

std::string axis_text(const AxisSpec& a) {
  switch (a.form) {
    case AxisSpec::Form::X: return "x";
    case AxisSpec::Form::Y: return "y";
    case AxisSpec::Form::Z: return "z";
    case AxisSpec::Form::Spherical: return "n(" + radians(a.a) + ", " + radians(a.b) + ")";
    case AxisSpec::Form::Vector:
      return "v(" + number(a.a) + ", " + number(a.b) + ", " + number(a.c) + ")";
  }
  return "?";
}

const char* named_text(NamedState n) {
  switch (n) {
    case NamedState::Up: return "up";
    case NamedState::Down: return "down";
    case NamedState::XPlus: return "x+";
    case NamedState::XMinus: return "x-";
    case NamedState::YPlus: return "y+";
    case NamedState::YMinus: return "y-";
  }
  return "?";
}

const char* emit_text(EmitWhat w) {
  switch (w) {
    case EmitWhat::State: return "state";
    case EmitWhat::Bloch: return "bloch";
    case EmitWhat::Operator: return "operator";
    case EmitWhat::All: return "all";
  }
  return "?";
}

struct Printer {
  std::string operator()(const SetConvention& s) const {
    return std::string("convention ") + std::string(to_string(s.convention));
  }
  std::string operator()(const SetState& s) const {
    switch (s.form) {
      case SetState::Form::Named: return std::string("state ") + named_text(s.named);
      case SetState::Form::Amplitudes:
        return "state (" + complex_text(s.up) + ", " + complex_text(s.down) + ")";
      case SetState::Form::Bloch:
        return "state bloch(" + radians(s.theta) + ", " + radians(s.phi) + ")";
    }
    return "?";
  }
  std::string operator()(const Rot& r) const {
    return "rot " + axis_text(r.axis) + " " + radians(r.angle);
  }
  std::string operator()(const Euler& e) const {
    return "euler (" + radians(e.angles.alpha) + ", " + radians(e.angles.beta) + ", " +
           radians(e.angles.gamma) + ") " +
           (e.mode == EulerMode::Intrinsic ? "intrinsic" : "extrinsic");
  }
  std::string operator()(const Measure& m) const { return "measure " + axis_text(m.axis); }
  std::string operator()(const Collapse& c) const {
    return c.branch == Branch::Plus ? "collapse +" : "collapse -";
  }
  std::string operator()(const Audit&) const { return "audit"; }
  std::string operator()(const Emit& e) const { return std::string("emit ") + emit_text(e.what); }
};

}  // namespace

ParseError::ParseError(std::string code, SourcePos pos, const std::string& what,
                       std::vector<std::string> expected)
    : std::runtime_error(located(pos, code + ": " + what)),
      code_(std::move(code)),
      pos_(pos),
      expected_(std::move(expected)) {}

Program parse(std::span<const Token> tokens) { return Parser(tokens).program(); }

Program parse_source(std::string_view source) {
  const std::vector<Token> toks = tokenize(source);
  return parse(toks);
}

std::string to_source(const Statement& s) { return std::visit(Printer{}, s.body); }

std::string to_source(const Program& p) {
  std::string out;
  for (const Statement& s : p.statements) {
    out += to_source(s);
    out += '\n';
  }
  return out;
}

Complex parse_complex_literal(std::string_view text) {
  const std::vector<Token> toks = tokenize(text);
  return Parser(toks).lone_complex();
}

}  // namespace rotor::dsl
