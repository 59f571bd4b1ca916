#include "cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "bootperc/builders.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/graph_io.hpp"
#include "bootperc/grid.hpp"

namespace bootperc::cli {

ExpressionError::ExpressionError(std::string message, std::string expression, std::size_t position)
    : std::runtime_error(std::move(message)), expression_(std::move(expression)), position_(position) {}

std::string ExpressionError::render() const {
  std::string out = std::string("parse error: ") + what() + "\n  " + expression_ + "\n  ";
  out.append(position_, ' ');
  out += "^\n";
  return out;
}

const std::vector<std::pair<std::string, std::size_t>>& builder_table() {
  static const std::vector<std::pair<std::string, std::size_t>> table{
      {"path", 1},      {"cycle", 1},    {"complete", 1}, {"bipartite", 2},
      {"hypercube", 1}, {"star", 1},     {"star+e", 1},   {"bfamily", 1},
      {"grid", 2},      {"wheel", 1},    {"petersen", 0}, {"triangle-pair", 0},
      {"subdivided-k4", 0},
  };
  return table;
}

namespace {

enum class Kind { Word, Number, Open, Close, File, End };

struct Token {
  Kind kind;
  std::string text;
  std::size_t pos;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { tokenize(); }

  Graph parse() {
    Graph g = expr();
    if (peek().kind != Kind::End) fail("unexpected '" + peek().text + "'", peek().pos);
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t pos) const {
    throw ExpressionError(message, std::string(text_), pos);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        tokens_.push_back({c == '(' ? Kind::Open : Kind::Close, std::string(1, c), i});
        ++i;
      } else if (text_.substr(i, 5) == "file:") {
        const std::size_t start = i;
        i += 5;
        const std::size_t path_start = i;
        while (i < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i])) && text_[i] != ')') ++i;
        if (i == path_start) fail("missing path after 'file:'", path_start);
        tokens_.push_back({Kind::File, std::string(text_.substr(path_start, i - path_start)), start});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = i;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        tokens_.push_back({Kind::Number, std::string(text_.substr(start, i - start)), start});
      } else if (word_char(c)) {
        const std::size_t start = i;
        while (i < text_.size() && word_char(text_[i])) ++i;
        tokens_.push_back({Kind::Word, std::string(text_.substr(start, i - start)), start});
      } else {
        fail(std::string("unexpected character '") + c + "'", i);
      }
    }
    tokens_.push_back({Kind::End, "end of input", text_.size()});
  }

  const Token& peek() const { return tokens_[next_]; }
  const Token& take() { return tokens_[next_++]; }

  Graph expr() {
    Graph g = term();
    while (peek().kind == Kind::Word && peek().text == "x") {
      take();
      g = direct_product(g, term());
    }
    return g;
  }

  Graph term() {
    const Token& t = take();
    switch (t.kind) {
      case Kind::Open: {
        Graph g = expr();
        if (peek().kind != Kind::Close) fail("expected ')'", peek().pos);
        take();
        return g;
      }
      case Kind::File:
        return load(t);
      case Kind::Word:
        return builder(t);
      default:
        fail("expected a graph, found '" + t.text + "'", t.pos);
    }
  }

  Graph load(const Token& t) const {
    std::ifstream in(t.text);
    if (!in) fail("cannot open '" + t.text + "'", t.pos);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return parse_graph(buf.str());
    } catch (const ParseError& e) {
      fail(t.text + ": " + e.what(), t.pos);
    }
  }

  Graph builder(const Token& name) {
    std::optional<std::size_t> arity;
    for (const auto& [builder_name, n] : builder_table()) {
      if (builder_name == name.text) arity = n;
    }
    if (!arity) fail("unknown builder '" + name.text + "'", name.pos);
    std::vector<std::size_t> args;
    for (std::size_t i = 0; i < *arity; ++i) {
      const Token& t = take();
      if (t.kind != Kind::Number) fail("'" + name.text + "' expects " + std::to_string(*arity) + " integer argument(s)", t.pos);
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc{} || value > 1'000'000) fail("integer out of range", t.pos);
      args.push_back(value);
    }
    try {
      return build(name.text, args);
    } catch (const PreconditionError& e) {
      fail(e.what(), name.pos);
    }
  }

  static Graph build(const std::string& name, const std::vector<std::size_t>& a) {
    if (name == "path") return build_path(a[0]);
    if (name == "cycle") return build_cycle(a[0]);
    if (name == "complete") return build_complete(a[0]);
    if (name == "bipartite") return build_complete_bipartite(a[0], a[1]);
    if (name == "hypercube") return build_hypercube(a[0]);
    if (name == "star") return build_star(a[0]);
    if (name == "star+e") return build_star_plus_edge(a[0]);
    if (name == "bfamily") return build_b_family(a[0]);
    if (name == "grid") return build_grid(static_cast<int>(a[0]), static_cast<int>(a[1]));
    if (name == "wheel") return build_wheel(a[0]);
    if (name == "petersen") return build_petersen();
    if (name == "triangle-pair") return build_triangle_pair();
    return build_subdivided_k4();
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

}  // namespace

Graph parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace bootperc::cli
