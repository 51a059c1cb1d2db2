#include "btevo/bt/dsl.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace btevo::bt {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum Type { Open, Close, Atom, End } type;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const auto line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, {}, line, col};
    const char c = src_[pos_];
    if (c == '(' || c == ')') {
      advance();
      return {c == '(' ? Token::Open : Token::Close, src_.substr(pos_ - 1, 1), line, col};
    }
    const auto start = pos_;
    while (pos_ < src_.size() && !is_delim(src_[pos_])) advance();
    return {Token::Atom, src_.substr(start, pos_ - start), line, col};
  }

 private:
  static bool is_delim(char c) {
    return c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  TreeSpec parse_tree() {
    auto t = parse_node();
    if (tok_.type != Token::End) fail(tok_, "unexpected input after tree (one tree per file)");
    return t;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    if (t.type == Token::End) throw ParseError(t.line, t.column, "unexpected end of input, " + msg);
    throw ParseError(t.line, t.column, msg);
  }
  Token take() {
    auto t = tok_;
    tok_ = lex_.next();
    return t;
  }
  Token expect_atom(const char* what) {
    if (tok_.type != Token::Atom) fail(tok_, std::string("expected ") + what);
    return take();
  }
  void expect_close() {
    if (tok_.type != Token::Close) fail(tok_, "expected ')'");
    take();
  }
  static double number(const Token& t) {
    double v = 0.0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    if (!t.text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      fail(t, "expected a decimal number, got '" + std::string(t.text) + "'");
    return v;
  }

  TreeSpec parse_node() {
    if (tok_.type != Token::Open) fail(tok_, "expected '('");
    take();
    const auto head = expect_atom("node type (sel, seq, cond, act)");
    if (head.text == "sel" || head.text == "seq") {
      TreeSpec t{head.text == "sel" ? NodeKind{Selector{}} : NodeKind{Sequence{}}, {}};
      while (tok_.type == Token::Open) t.children.push_back(parse_node());
      expect_close();
      return t;
    }
    if (head.text == "cond") {
      const auto var_tok = expect_atom("variable name");
      const auto var = variable_from_name(var_tok.text);
      if (!var) fail(var_tok, "unknown variable " + std::string(var_tok.text));
      const auto cmp_tok = expect_atom("'>' or '<'");
      Comparison cmp;
      if (cmp_tok.text == ">") cmp = Comparison::GreaterThan;
      else if (cmp_tok.text == "<") cmp = Comparison::LessThan;
      else fail(cmp_tok, "expected '>' or '<', got '" + std::string(cmp_tok.text) + "'");
      const auto num_tok = expect_atom("threshold");
      const double threshold = number(num_tok);
      const auto range = range_of(*var);
      if (!range.contains(threshold)) {
        std::ostringstream msg;
        msg << "threshold " << threshold << " outside range [" << range.lo << ", " << range.hi
            << "] of " << var_tok.text;
        fail(num_tok, msg.str());
      }
      expect_close();
      return cond(*var, cmp, threshold);
    }
    if (head.text == "act") {
      const auto out = expect_atom("'r'");
      if (out.text != "r") fail(out, "actions can only set r, got '" + std::string(out.text) + "'");
      const auto num_tok = expect_atom("rudder setting");
      const double rudder = number(num_tok);
      if (!kRudderRange.contains(rudder)) fail(num_tok, "rudder setting outside [-1, 1]");
      expect_close();
      return act(rudder);
    }
    fail(head, "unknown node type '" + std::string(head.text) + "'");
  }

  Lexer lex_;
  Token tok_;
};

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string leaf_text(const NodeKind& k) {
  if (const auto* c = std::get_if<Condition>(&k)) {
    return "(cond " + std::string(name_of(c->variable)) +
           (c->comparison == Comparison::GreaterThan ? " > " : " < ") + format_number(c->threshold) + ")";
  }
  return "(act r " + format_number(std::get<Action>(k).rudder) + ")";
}

void write(const BehaviourTree& t, NodeIndex i, std::size_t indent, bool multiline, std::string& out) {
  const auto& n = t.node(i);
  if (!is_composite(n.kind)) {
    out += leaf_text(n.kind);
    return;
  }
  out += std::holds_alternative<Selector>(n.kind) ? "(sel" : "(seq";
  for (auto c : n.children) {
    if (multiline) {
      out += '\n';
      out.append(indent + 2, ' ');
    } else {
      out += ' ';
    }
    write(t, c, indent + 2, multiline, out);
  }
  out += ')';
}

}  // namespace

ParseResult parse(std::string_view text, ParseLimits limits) {
  Parser p(text);
  ParseResult result{BehaviourTree::from_spec(p.parse_tree()), {}};
  const auto& tree = result.tree;
  if (tree.depth() > limits.max_depth)
    result.warnings.push_back("tree depth " + std::to_string(tree.depth()) + " exceeds " +
                              std::to_string(limits.max_depth));
  if (tree.max_children() > limits.max_children)
    result.warnings.push_back("composite with " + std::to_string(tree.max_children()) +
                              " children exceeds " + std::to_string(limits.max_children));
  return result;
}

std::string serialize(const BehaviourTree& tree) {
  std::string out;
  write(tree, BehaviourTree::root(), 0, true, out);
  out += '\n';
  return out;
}

std::string serialize_compact(const BehaviourTree& tree) {
  std::string out;
  write(tree, BehaviourTree::root(), 0, false, out);
  return out;
}

}  // namespace btevo::bt
