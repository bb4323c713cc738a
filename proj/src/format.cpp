#include "lsx/format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lsx {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;
};

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  fail(ErrorKind::Parse,
       "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

// one logical line of tokens; '{', '}' and '->' are their own tokens
std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> current;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto flush_line = [&] {
    if (!current.empty()) lines.push_back(std::move(current));
    current = {};
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      flush_line();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    const int tok_line = line, tok_col = col;
    std::string tok;
    if (ch == '{' || ch == '}') {
      tok = std::string(1, ch);
      ++i;
      ++col;
    } else if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok = "->";
      i += 2;
      col += 2;
    } else {
      while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '#' ||
            (c == '-' && i + 1 < text.size() && text[i + 1] == '>')) {
          break;
        }
        tok.push_back(c);
        ++i;
        ++col;
      }
    }
    current.push_back({tok, tok_line, tok_col});
  }
  flush_line();
  return lines;
}

int parse_int(const Token& t, const std::string& what) {
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      parse_fail(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
    }
  }
  try {
    return std::stoi(t.text);
  } catch (const std::exception&) {
    parse_fail(t.line, t.col, what + " out of range: '" + t.text + "'");
  }
}

// parses "{ e1 e2 ... }" starting at tokens[k]; advances k past '}'
Mask parse_subset(const std::vector<Token>& tokens, std::size_t& k, int n) {
  if (k >= tokens.size() || tokens[k].text != "{") {
    const Token& t = k < tokens.size() ? tokens[k] : tokens.back();
    parse_fail(t.line, t.col, "expected '{'");
  }
  ++k;
  Mask out = 0;
  while (k < tokens.size() && tokens[k].text != "}") {
    const int e = parse_int(tokens[k], "an element");
    if (e >= n) {
      parse_fail(tokens[k].line, tokens[k].col,
                 "element " + std::to_string(e) + " outside carrier of size " + std::to_string(n));
    }
    out |= element_bit(e);
    ++k;
  }
  if (k >= tokens.size()) {
    parse_fail(tokens.back().line, tokens.back().col, "unterminated subset, expected '}'");
  }
  ++k;  // consume '}'
  return out;
}

}  // namespace

StructureFile parse_structure_file(const std::string& text) {
  StructureFile file;
  bool saw_name = false, saw_n = false, saw_mode = false, saw_default = false, saw_rule = false;
  std::vector<char> seen;  // duplicate map detection, sized once n is known

  for (const auto& tokens : tokenize_lines(text)) {
    const Token& head = tokens[0];
    const std::string& kw = head.text;
    if (kw == "structure") {
      if (tokens.size() != 2) parse_fail(head.line, head.col, "expected: structure NAME");
      file.name = tokens[1].text;
      saw_name = true;
    } else if (kw == "elements") {
      if (tokens.size() != 2) parse_fail(head.line, head.col, "expected: elements N");
      file.n = parse_int(tokens[1], "a carrier size");
      if (file.n < 1 || file.n > kMaxCarrier) {
        parse_fail(tokens[1].line, tokens[1].col,
                   "carrier size must be between 1 and " + std::to_string(kMaxCarrier));
      }
      seen.assign(std::size_t{1} << file.n, 0);
      saw_n = true;
    } else if (kw == "mode") {
      if (tokens.size() != 2 || (tokens[1].text != "table" && tokens[1].text != "rule")) {
        parse_fail(head.line, head.col, "expected: mode table|rule");
      }
      file.table_mode = tokens[1].text == "table";
      saw_mode = true;
    } else if (kw == "map") {
      if (!saw_n) parse_fail(head.line, head.col, "map before elements");
      std::size_t k = 1;
      const Mask gamma = parse_subset(tokens, k, file.n);
      if (k >= tokens.size() || tokens[k].text != "->") {
        parse_fail(head.line, head.col, "expected '->' in map line");
      }
      ++k;
      const Mask value = parse_subset(tokens, k, file.n);
      if (k != tokens.size()) parse_fail(tokens[k].line, tokens[k].col, "trailing tokens");
      if (seen[gamma]) {
        parse_fail(head.line, head.col, "duplicate map line for subset " + format_subset(gamma));
      }
      seen[gamma] = 1;
      file.entries.push_back({gamma, value});
    } else if (kw == "default") {
      if (!saw_n) parse_fail(head.line, head.col, "default before elements");
      if (tokens.size() == 2 && tokens[1].text == "identity") {
        file.default_rule = DefaultRule::Identity;
      } else if (tokens.size() == 2 && tokens[1].text == "full") {
        file.default_rule = DefaultRule::Full;
      } else if (tokens.size() >= 2 && tokens[1].text == "{") {
        std::size_t k = 1;
        file.named_default = parse_subset(tokens, k, file.n);
        if (k != tokens.size()) parse_fail(tokens[k].line, tokens[k].col, "trailing tokens");
        file.default_rule = DefaultRule::NamedSubset;
      } else {
        parse_fail(head.line, head.col, "expected: default identity|full|{...}");
      }
      saw_default = true;
    } else if (kw == "rule") {
      if (tokens.size() != 2) parse_fail(head.line, head.col, "expected: rule NAME");
      file.rule_name = tokens[1].text;
      saw_rule = true;
    } else {
      parse_fail(head.line, head.col, "unknown directive '" + kw + "'");
    }
  }

  if (!saw_name) fail(ErrorKind::Parse, "missing 'structure NAME' line");
  if (!saw_n) fail(ErrorKind::Parse, "missing 'elements N' line");
  if (!saw_mode) fail(ErrorKind::Parse, "missing 'mode' line");
  if (file.table_mode) {
    if (saw_rule) fail(ErrorKind::Parse, "'rule' line not allowed in table mode");
    if (!saw_default) fail(ErrorKind::Parse, "table mode requires a 'default' line");
  } else {
    if (!saw_rule) fail(ErrorKind::Parse, "rule mode requires a 'rule' line");
    if (!file.entries.empty() || saw_default) {
      fail(ErrorKind::Parse, "map/default lines not allowed in rule mode");
    }
  }
  return file;
}

std::string serialize_structure_file(const StructureFile& file) {
  std::ostringstream out;
  out << "structure " << file.name << "\n";
  out << "elements " << file.n << "\n";
  out << "mode " << (file.table_mode ? "table" : "rule") << "\n";
  if (file.table_mode) {
    auto write_subset = [&out](Mask m) {
      out << '{';
      bool first = true;
      for (int i = 0; i < kMaxCarrier; ++i) {
        if (!contains(m, i)) continue;
        if (!first) out << ' ';
        out << i;
        first = false;
      }
      out << '}';
    };
    for (const TableEntry& e : file.entries) {
      out << "map ";
      write_subset(e.gamma);
      out << " -> ";
      write_subset(e.value);
      out << "\n";
    }
    out << "default ";
    switch (file.default_rule) {
      case DefaultRule::Identity: out << "identity"; break;
      case DefaultRule::Full: out << "full"; break;
      case DefaultRule::NamedSubset: write_subset(file.named_default); break;
    }
    out << "\n";
  } else {
    out << "rule " << file.rule_name << "\n";
  }
  return out.str();
}

LogicalStructure to_structure(const StructureFile& file) {
  if (file.table_mode) {
    return structure_from_entries(file.n, file.entries, file.default_rule, file.named_default);
  }
  return structure_from_rule(file.n, file.rule_name);
}

StructureFile load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure_file(buf.str());
}

ArrowTable parse_arrow_file(const std::string& text) {
  int n = -1;
  std::vector<int> op;
  std::vector<char> seen_row;
  for (const auto& tokens : tokenize_lines(text)) {
    const Token& head = tokens[0];
    if (head.text == "arrow") {
      if (tokens.size() != 2) parse_fail(head.line, head.col, "expected: arrow NAME");
    } else if (head.text == "elements") {
      if (tokens.size() != 2) parse_fail(head.line, head.col, "expected: elements N");
      n = parse_int(tokens[1], "a carrier size");
      if (n < 1 || n > kMaxCarrier) parse_fail(tokens[1].line, tokens[1].col, "carrier size out of range");
      op.assign(static_cast<std::size_t>(n) * n, 0);
      seen_row.assign(n, 0);
    } else if (head.text == "row") {
      if (n < 0) parse_fail(head.line, head.col, "row before elements");
      if (tokens.size() != static_cast<std::size_t>(n) + 3 || tokens[2].text != "->") {
        parse_fail(head.line, head.col, "expected: row A -> v0 v1 ... v" + std::to_string(n - 1));
      }
      const int a = parse_int(tokens[1], "a row index");
      if (a >= n) parse_fail(tokens[1].line, tokens[1].col, "row index outside carrier");
      if (seen_row[a]) parse_fail(head.line, head.col, "duplicate row " + std::to_string(a));
      seen_row[a] = 1;
      for (int b = 0; b < n; ++b) {
        const int v = parse_int(tokens[3 + b], "an arrow value");
        if (v >= n) parse_fail(tokens[3 + b].line, tokens[3 + b].col, "value outside carrier");
        op[static_cast<std::size_t>(a) * n + b] = v;
      }
    } else {
      parse_fail(head.line, head.col, "unknown directive '" + head.text + "'");
    }
  }
  if (n < 0) fail(ErrorKind::Parse, "missing 'elements N' line");
  for (int a = 0; a < n; ++a) {
    if (!seen_row[a]) fail(ErrorKind::Parse, "missing row " + std::to_string(a));
  }
  return make_arrow(n, std::move(op));
}

ArrowTable load_arrow_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrow_file(buf.str());
}

std::vector<std::string> lex_tokens(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& line : tokenize_lines(text)) {
    for (const auto& t : line) out.push_back(t.text);
  }
  return out;
}

}  // namespace lsx
