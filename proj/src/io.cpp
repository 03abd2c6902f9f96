#include "fuzzynf/io.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "fuzzynf/error.hpp"

namespace fuzzynf {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

struct Cell {
  std::string text;
  std::size_t column;  // 1-based position of the cell's first character
};

// Comma-separated cells; a cell may be double-quoted with "" as an escaped quote.
std::vector<Cell> split_cells(const Line& line) {
  std::vector<Cell> cells;
  const auto s = line.text;
  std::size_t i = 0;
  while (true) {
    const std::size_t start = i;
    while (i < s.size() && is_space(s[i]) && s[i] != ',') ++i;
    std::string value;
    if (i < s.size() && s[i] == '"') {
      const std::size_t open = i++;
      bool closed = false;
      while (i < s.size()) {
        if (s[i] == '"') {
          if (i + 1 < s.size() && s[i + 1] == '"') {
            value += '"';
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        value += s[i++];
      }
      if (!closed) throw ParseError("unterminated quoted cell", line.number, open + 1);
      while (i < s.size() && is_space(s[i])) ++i;
      if (i < s.size() && s[i] != ',') throw ParseError("unexpected text after quoted cell", line.number, i + 1);
    } else {
      const std::size_t comma = s.find(',', i);
      const std::size_t end = comma == std::string_view::npos ? s.size() : comma;
      value = std::string(s.substr(i, end - i));
      i = end;
    }
    cells.push_back({std::string(trim(value)), start + 1});
    if (i >= s.size()) break;
    ++i;  // skip ','
  }
  return cells;
}

AttributeValue parse_cell(const Cell& cell, AttributeKind kind, std::size_t line) {
  if (kind == AttributeKind::Atom) {
    if (cell.text.empty()) throw ParseError("empty atom cell", line, cell.column);
    if (!is_valid_label(cell.text)) throw ParseError("invalid label '" + cell.text + "'", line, cell.column);
    return AttributeValue::atom(cell.text);
  }
  if (cell.text.empty()) throw ParseError("empty set cell", line, cell.column);
  std::set<Label> labels;
  std::string_view rest = cell.text;
  while (true) {
    const auto semi = rest.find(';');
    const auto piece = trim(rest.substr(0, semi));
    if (piece.empty()) throw ParseError("empty label in set cell", line, cell.column);
    if (!is_valid_label(piece)) throw ParseError("invalid label '" + std::string(piece) + "'", line, cell.column);
    labels.emplace(piece);
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return AttributeValue::multi(SetValue(std::move(labels)));
}

// ---- dependency DSL --------------------------------------------------------

enum class TokenKind { Name, Comma, LParen, RParen, Arrow, DoubleArrow, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::Name: return "'" + t.text + "'";
    case TokenKind::Comma: return "','";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::DoubleArrow: return "'->>'";
    case TokenKind::End: return "end of line";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view s, std::size_t line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == ',') {
      tokens.push_back({TokenKind::Comma, ",", i + 1});
      ++i;
    } else if (c == '(') {
      tokens.push_back({TokenKind::LParen, "(", i + 1});
      ++i;
    } else if (c == ')') {
      tokens.push_back({TokenKind::RParen, ")", i + 1});
      ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      if (i + 2 < s.size() && s[i + 2] == '>') {
        tokens.push_back({TokenKind::DoubleArrow, "->>", i + 1});
        i += 3;
      } else {
        tokens.push_back({TokenKind::Arrow, "->", i + 1});
        i += 2;
      }
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      tokens.push_back({TokenKind::Name, std::string(s.substr(start, i - start)), start + 1});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, i + 1);
    }
  }
  tokens.push_back({TokenKind::End, "", s.size() + 1});
  return tokens;
}

class DeclParser {
 public:
  DeclParser(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  bool at_end() const { return peek().kind == TokenKind::End; }
  const Token& peek() const { return tokens_[pos_]; }

  Token expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) {
      throw ParseError("expected " + std::string(what) + ", found " + describe(peek()), line_, peek().column);
    }
    return tokens_[pos_++];
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  AttributeSubset name_list() {
    AttributeSubset names;
    do {
      const auto t = expect(TokenKind::Name, "attribute name");
      if (!is_valid_attribute_name(t.text)) {
        throw ParseError("invalid attribute name '" + t.text + "'", line_, t.column);
      }
      names.insert(t.text);
    } while (accept(TokenKind::Comma));
    return names;
  }

  std::vector<AttributeSubset> component_list() {
    std::vector<AttributeSubset> components;
    do {
      expect(TokenKind::LParen, "'('");
      components.push_back(name_list());
      expect(TokenKind::RParen, "')'");
    } while (accept(TokenKind::Comma));
    return components;
  }

  void finish() { expect(TokenKind::End, "end of line"); }

  Dependency declaration() {
    const auto keyword = expect(TokenKind::Name, "FD, MVD or JD");
    if (keyword.text == "FD") {
      auto lhs = name_list();
      expect(TokenKind::Arrow, "'->'");
      auto rhs = name_list();
      finish();
      return FunctionalDep{std::move(lhs), std::move(rhs)};
    }
    if (keyword.text == "MVD") {
      auto lhs = name_list();
      expect(TokenKind::DoubleArrow, "'->>'");
      auto rhs = name_list();
      finish();
      return MultivaluedDep{std::move(lhs), std::move(rhs)};
    }
    if (keyword.text == "JD") {
      const auto column = peek().column;
      auto components = component_list();
      finish();
      if (components.size() < 2) throw ParseError("JD needs at least two components", line_, column);
      return JoinDep{std::move(components)};
    }
    throw ParseError("unknown declaration '" + keyword.text + "'", line_, keyword.column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace

RelationInstance parse_relation(std::string_view text) {
  const auto lines = split_lines(text);
  auto it = lines.begin();
  while (it != lines.end() && trim(it->text).empty()) ++it;
  if (it == lines.end()) throw ParseError("missing header line", 1, 0);

  std::vector<AttributeDef> defs;
  std::map<std::string, std::size_t> seen_names;
  for (const auto& cell : split_cells(*it)) {
    const auto colon = cell.text.find(':');
    if (colon == std::string::npos) throw ParseError("header cell must be name:kind", it->number, cell.column);
    const auto name = std::string(trim(std::string_view(cell.text).substr(0, colon)));
    const auto kind = trim(std::string_view(cell.text).substr(colon + 1));
    if (!is_valid_attribute_name(name)) throw ParseError("invalid attribute name '" + name + "'", it->number, cell.column);
    if (!seen_names.emplace(name, cell.column).second) {
      throw ParseError("duplicate attribute name '" + name + "'", it->number, cell.column);
    }
    if (kind == "atom") {
      defs.push_back({name, AttributeKind::Atom});
    } else if (kind == "set") {
      defs.push_back({name, AttributeKind::MultiSet});
    } else {
      throw ParseError("unknown kind '" + std::string(kind) + "'", it->number, cell.column);
    }
  }
  Schema schema(defs);

  std::vector<Tuple> tuples;
  std::map<Tuple, std::size_t> first_line;
  for (++it; it != lines.end(); ++it) {
    if (trim(it->text).empty()) continue;
    const auto cells = split_cells(*it);
    if (cells.size() != defs.size()) {
      const std::size_t column = cells.size() > defs.size() ? cells[defs.size()].column : it->text.size() + 1;
      throw ParseError("row has " + std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(defs.size()),
                       it->number, column);
    }
    Tuple t;
    for (std::size_t c = 0; c < cells.size(); ++c) t.push_back(parse_cell(cells[c], defs[c].kind, it->number));
    if (auto [pos, fresh] = first_line.emplace(t, it->number); !fresh) {
      throw ParseError("duplicate tuple (same as line " + std::to_string(pos->second) + ")", it->number, 1);
    }
    tuples.push_back(std::move(t));
  }
  return RelationInstance(std::move(schema), std::move(tuples));
}

std::string render_relation(const RelationInstance& r) {
  std::string out;
  const auto& attrs = r.schema().attributes();
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i) out += ',';
    out += attrs[i].name + ":" + std::string(to_string(attrs[i].kind));
  }
  out += '\n';
  for (const auto& t : r.tuples()) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      bool first = true;
      for (const auto& label : t[i].as_set().elements()) {
        if (!first) out += ';';
        out += label;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

std::vector<Dependency> parse_deps(std::string_view text) {
  std::vector<Dependency> deps;
  for (const auto& line : split_lines(text)) {
    DeclParser parser(tokenize(line.text, line.number), line.number);
    if (parser.at_end()) continue;
    deps.push_back(parser.declaration());
  }
  return deps;
}

std::vector<AttributeSubset> parse_components(std::string_view text) {
  DeclParser parser(tokenize(text, 1), 1);
  auto components = parser.component_list();
  parser.finish();
  return components;
}

}  // namespace fuzzynf
