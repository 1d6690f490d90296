#include <cctype>
#include <charconv>
#include <sstream>

#include "rotor/dsl.hpp"

namespace rotor::dsl {

namespace {

std::string located(SourcePos pos, const std::string& what) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": " << what;
  return os.str();
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i_ < src_.size()) {
      const char c = src_[i_];
      const SourcePos start = pos();
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (c == '\n') {
        out.push_back({TokenKind::Newline, "\\n", 0.0, start});
        advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (is_digit(c) || (c == '.' && i_ + 1 < src_.size() && is_digit(src_[i_ + 1]))) {
        lex_number(out);
      } else if (is_alpha(c)) {
        const std::size_t b = i_;
        while (i_ < src_.size() && (is_alpha(src_[i_]) || is_digit(src_[i_]))) advance();
        out.push_back({TokenKind::Ident, std::string(src_.substr(b, i_ - b)), 0.0, start});
      } else {
        TokenKind kind;
        switch (c) {
          case '(': kind = TokenKind::LParen; break;
          case ')': kind = TokenKind::RParen; break;
          case ',': kind = TokenKind::Comma; break;
          case ';': kind = TokenKind::Semicolon; break;
          case '+': kind = TokenKind::Plus; break;
          case '-': kind = TokenKind::Minus; break;
          default: {
            std::string shown;
            if (static_cast<unsigned char>(c) < 0x80) {
              shown = std::string("'") + c + "'";
            } else {
              shown = "non-ASCII byte";
            }
            throw LexError(start, "illegal character " + shown);
          }
        }
        out.push_back({kind, std::string(1, c), 0.0, start});
        advance();
      }
    }
    out.push_back({TokenKind::End, "", 0.0, pos()});
    return out;
  }

 private:
  SourcePos pos() const { return {line_, col_}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void lex_number(std::vector<Token>& out) {
    const SourcePos start = pos();
    const std::size_t b = i_;
    while (i_ < src_.size() && is_digit(src_[i_])) advance();
    if (i_ < src_.size() && src_[i_] == '.') {
      advance();
      while (i_ < src_.size() && is_digit(src_[i_])) advance();
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t j = i_ + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      if (j < src_.size() && is_digit(src_[j])) {
        while (i_ < j) advance();
        while (i_ < src_.size() && is_digit(src_[i_])) advance();
      }
    }
    const std::string_view digits = src_.substr(b, i_ - b);
    double value = 0.0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) {
      throw LexError(start, "malformed number '" + std::string(digits) + "'");
    }

    const SourcePos suffix_pos = pos();
    const std::size_t s = i_;
    while (i_ < src_.size() && (is_alpha(src_[i_]) || is_digit(src_[i_]))) advance();
    const std::string_view suffix = src_.substr(s, i_ - s);
    if (suffix.empty()) {
      out.push_back({TokenKind::Number, std::string(digits), value, start});
    } else if (suffix == "deg" || suffix == "rad") {
      out.push_back({TokenKind::Number, std::string(digits), value, start});
      out.push_back({TokenKind::Unit, std::string(suffix), 0.0, suffix_pos});
    } else if (suffix == "i") {
      out.push_back({TokenKind::Imag, std::string(digits) + "i", value, start});
    } else {
      throw LexError(suffix_pos, "unknown number suffix '" + std::string(suffix) + "'");
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Ident: return "IDENT";
    case TokenKind::Number: return "NUMBER";
    case TokenKind::Unit: return "UNIT";
    case TokenKind::Imag: return "IMAG";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Newline: return "NEWLINE";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

LexError::LexError(SourcePos pos, const std::string& what)
    : std::runtime_error(located(pos, "LexError: " + what)), pos_(pos) {}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace rotor::dsl
