#include "qhb/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qhb/report.hpp"

namespace qhb {

namespace {

struct Token {
  enum class Kind { Name, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at line " + std::to_string(current_.line) + ", column " +
                          std::to_string(current_.column),
                      current_.line, current_.column);
  }

  Token expect_name(const std::string& what) {
    if (current_.kind != Token::Kind::Name) fail("expected " + what);
    return take();
  }

  void expect_punct(const std::string& p) {
    if (current_.kind != Token::Kind::Punct || current_.text != p) fail("expected '" + p + "'");
    take();
  }

  bool match_punct(const std::string& p) {
    if (current_.kind == Token::Kind::Punct && current_.text == p) {
      take();
      return true;
    }
    return false;
  }

 private:
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (name_char(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && name_char(text_[pos_])) {
        ++pos_;
        ++col_;
      }
      current_.kind = Token::Kind::Name;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      current_.kind = Token::Kind::Punct;
      current_.text = "->";
      pos_ += 2;
      col_ += 2;
      return;
    }
    if (c == '{' || c == '}' || c == ':' || c == ';' || c == '<' || c == '.') {
      current_.kind = Token::Kind::Punct;
      current_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "' at line " +
                          std::to_string(line_) + ", column " + std::to_string(col_),
                      line_, col_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

bool is_section_keyword(const Token& t) {
  return t.kind == Token::Kind::Name &&
         (t.text == "vertices" || t.text == "arrows" || t.text == "relations" ||
          t.text == "order");
}

}  // namespace

ProblemSpec parse_spec(std::string_view text) {
  Lexer lex(text);

  Token kw = lex.expect_name("'quiver'");
  if (kw.text != "quiver") lex.fail("expected 'quiver'");
  std::string name = lex.expect_name("quiver name").text;
  lex.expect_punct("{");

  std::vector<std::string> vertices;
  struct RawArrow {
    std::string name, source, target;
  };
  std::vector<RawArrow> raw_arrows;
  std::vector<std::vector<std::string>> raw_relations;
  std::vector<std::vector<std::string>> raw_chains;
  bool saw_vertices = false, saw_arrows = false, saw_relations = false, saw_order = false;

  while (!lex.match_punct("}")) {
    Token section = lex.expect_name("section keyword");
    if (!is_section_keyword(section)) {
      throw SyntaxError("unknown section '" + section.text + "' at line " +
                            std::to_string(section.line),
                        section.line, section.column);
    }
    lex.expect_punct(":");
    if (section.text == "vertices") {
      if (saw_vertices) lex.fail("duplicate vertices section");
      saw_vertices = true;
      while (lex.peek().kind == Token::Kind::Name && !is_section_keyword(lex.peek())) {
        vertices.push_back(lex.take().text);
      }
      lex.expect_punct(";");
    } else if (section.text == "arrows") {
      if (saw_arrows) lex.fail("duplicate arrows section");
      saw_arrows = true;
      while (lex.peek().kind == Token::Kind::Name && !is_section_keyword(lex.peek())) {
        std::string arrow_name = lex.take().text;
        lex.expect_punct(":");
        std::string src = lex.expect_name("source vertex").text;
        lex.expect_punct("->");
        std::string tgt = lex.expect_name("target vertex").text;
        lex.expect_punct(";");
        raw_arrows.push_back({arrow_name, src, tgt});
      }
    } else if (section.text == "relations") {
      if (saw_relations) lex.fail("duplicate relations section");
      saw_relations = true;
      while (lex.peek().kind == Token::Kind::Name && !is_section_keyword(lex.peek())) {
        std::vector<std::string> arrow_names{lex.take().text};
        while (lex.match_punct(".")) arrow_names.push_back(lex.expect_name("arrow name").text);
        lex.expect_punct(";");
        if (arrow_names.size() < 2) {
          throw SyntaxError("relation must have length >= 2", lex.peek().line,
                            lex.peek().column);
        }
        raw_relations.push_back(std::move(arrow_names));
      }
    } else {  // order
      if (saw_order) lex.fail("duplicate order section");
      saw_order = true;
      while (lex.peek().kind == Token::Kind::Name && !is_section_keyword(lex.peek())) {
        std::vector<std::string> chain{lex.take().text};
        while (lex.match_punct("<")) chain.push_back(lex.expect_name("vertex").text);
        raw_chains.push_back(std::move(chain));
        if (!lex.match_punct(";")) break;
      }
    }
  }
  if (lex.peek().kind != Token::Kind::End) lex.fail("trailing input after '}'");
  if (!saw_vertices || vertices.empty()) {
    throw SyntaxError("spec needs a non-empty vertices section", 1, 1);
  }

  auto vertex_of = [&](const std::string& label) {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (vertices[v] == label) return static_cast<int>(v);
    }
    throw UnknownVertex("unknown vertex: " + label);
  };

  std::vector<Arrow> arrows;
  for (const RawArrow& a : raw_arrows) {
    arrows.push_back({a.name, vertex_of(a.source), vertex_of(a.target)});
  }

  std::vector<Path> relations;
  BoundQuiver arrows_only(vertices, arrows, {});
  for (const auto& names : raw_relations) {
    try {
      relations.push_back(arrows_only.make_path_from_names(names));
    } catch (const NotComposable& e) {
      throw NonComposableRelation(e.what());
    }
  }
  BoundQuiver quiver(vertices, std::move(arrows), std::move(relations));

  std::vector<std::pair<int, int>> pairs;
  for (const auto& chain : raw_chains) {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      pairs.emplace_back(vertex_of(chain[k]), vertex_of(chain[k + 1]));
    }
    if (chain.size() == 1) vertex_of(chain[0]);  // validate the mention
  }
  VertexOrder order = VertexOrder::partial_from_pairs(quiver.vertex_count(), pairs);

  return ProblemSpec{std::move(name), std::move(quiver), std::move(order)};
}

std::string render_spec(const ProblemSpec& spec) {
  const BoundQuiver& q = spec.quiver;
  std::ostringstream out;
  out << "quiver " << spec.name << " {\n";
  out << "  vertices:";
  for (const std::string& v : q.vertex_labels()) out << ' ' << v;
  out << " ;\n";
  if (q.arrow_count() > 0) {
    out << "  arrows:\n";
    for (const Arrow& a : q.arrows()) {
      out << "    " << a.name << " : " << q.vertex_label(a.source) << " -> "
          << q.vertex_label(a.target) << " ;\n";
    }
  }
  if (!q.relation_generators().empty()) {
    out << "  relations:\n";
    for (const Path& r : q.relation_generators()) out << "    " << q.path_key(r) << " ;\n";
  }
  if (spec.order.total()) {
    out << "  order: ";
    std::vector<int> chain = spec.order.chain();
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (k) out << " < ";
      out << q.vertex_label(chain[k]);
    }
    out << " ;\n";
  } else {
    auto covers = spec.order.cover_pairs();
    if (!covers.empty()) {
      out << "  order:";
      for (std::size_t k = 0; k < covers.size(); ++k) {
        out << ' ' << q.vertex_label(covers[k].first) << " < "
            << q.vertex_label(covers[k].second) << " ;";
      }
      out << "\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string input_digest(const ProblemSpec& spec) { return sha256_hex(render_spec(spec)); }

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  if (a.name != b.name) return false;
  if (a.quiver.vertex_labels() != b.quiver.vertex_labels()) return false;
  if (a.quiver.arrow_count() != b.quiver.arrow_count()) return false;
  for (int k = 0; k < a.quiver.arrow_count(); ++k) {
    const Arrow& x = a.quiver.arrow(k);
    const Arrow& y = b.quiver.arrow(k);
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  if (a.quiver.relation_generators().size() != b.quiver.relation_generators().size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.quiver.relation_generators().size(); ++k) {
    if (!(a.quiver.relation_generators()[k] == b.quiver.relation_generators()[k])) return false;
  }
  return a.order == b.order;
}

}  // namespace qhb
