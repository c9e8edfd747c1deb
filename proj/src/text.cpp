#include "rrefkit/text.hpp"

#include <charconv>
#include <sstream>

#include "rrefkit/error.hpp"

namespace rrefkit {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct SourceLine {
  std::size_t number;  // 1-based
  std::string body;    // comment stripped
};

// Lines with content left after removing comments and whitespace.
std::vector<SourceLine> content_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({number, std::string(line)});
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

std::vector<Scalar> parse_entries(const std::vector<std::string>& words, const FieldSpec& field,
                                  std::size_t line) {
  std::vector<Scalar> out;
  out.reserve(words.size());
  for (const std::string& w : words) {
    try {
      out.push_back(parse_scalar(w, field));
    } catch (const ParseError& e) {
      throw ParseError(line, e.what());
    } catch (const DivisionByZero& e) {
      throw DivisionByZero("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

Index parse_index(const std::string& word, std::size_t line) {
  Index value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || value == 0) {
    throw ParseError(line, "expected a positive row index, found '" + word + "'");
  }
  return value;
}

}  // namespace

Matrix parse_matrix(std::string_view text, const FieldSpec& field) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix input");
  std::vector<std::vector<Scalar>> rows;
  for (const SourceLine& line : lines) {
    const auto words = split_words(line.body);
    if (!rows.empty() && words.size() != rows.front().size()) {
      throw ParseError(line.number, "ragged row: expected " + std::to_string(rows.front().size()) +
                                        " entries, found " + std::to_string(words.size()));
    }
    rows.push_back(parse_entries(words, field, line.number));
  }
  return Matrix::from_rows(field, rows);
}

LinearSystem parse_system(std::string_view text, const FieldSpec& field) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty system input");
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (const SourceLine& line : lines) {
    const auto bar = line.body.find('|');
    if (bar == std::string::npos || line.body.find('|', bar + 1) != std::string::npos) {
      throw ParseError(line.number, "expected exactly one '|' separating the right-hand side");
    }
    const auto left = split_words(std::string_view(line.body).substr(0, bar));
    const auto right = split_words(std::string_view(line.body).substr(bar + 1));
    if (left.empty()) throw ParseError(line.number, "no coefficients before '|'");
    if (right.size() != 1) {
      throw ParseError(line.number, "expected one right-hand side entry, found " + std::to_string(right.size()));
    }
    if (!rows.empty() && left.size() != rows.front().size()) {
      throw ParseError(line.number, "ragged row: expected " + std::to_string(rows.front().size()) +
                                        " coefficients, found " + std::to_string(left.size()));
    }
    rows.push_back(parse_entries(left, field, line.number));
    rhs.push_back(parse_entries(right, field, line.number).front());
  }
  return LinearSystem(Matrix::from_rows(field, rows), Vector(field, std::move(rhs)));
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i > 0) out += ' ';
    out += format_scalar(v[i]);
  }
  return out;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_scalar(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_row_op(const RowOp& op) {
  return std::visit(
      overloaded{
          [](const Swap& s) { return "swap " + std::to_string(s.i) + " " + std::to_string(s.j); },
          [](const Scale& s) { return "scale " + std::to_string(s.i) + " " + format_scalar(s.c); },
          [](const Axpy& a) {
            return "axpy " + std::to_string(a.target) + " " + std::to_string(a.source) + " " +
                   format_scalar(a.c);
          },
      },
      op);
}

std::vector<RowOp> parse_row_ops(std::string_view text, const FieldSpec& field) {
  std::vector<RowOp> ops;
  for (const SourceLine& line : content_lines(text)) {
    const auto words = split_words(line.body);
    const std::string& kind = words.front();
    const auto expect = [&](std::size_t n) {
      if (words.size() != n) {
        throw ParseError(line.number, "'" + kind + "' takes " + std::to_string(n - 1) + " arguments");
      }
    };
    if (kind == "swap") {
      expect(3);
      ops.push_back(Swap{parse_index(words[1], line.number), parse_index(words[2], line.number)});
    } else if (kind == "scale") {
      expect(3);
      ops.push_back(Scale{parse_index(words[1], line.number), parse_entries({words[2]}, field, line.number)[0]});
    } else if (kind == "axpy") {
      expect(4);
      ops.push_back(Axpy{parse_index(words[1], line.number), parse_index(words[2], line.number),
                         parse_entries({words[3]}, field, line.number)[0]});
    } else {
      throw ParseError(line.number, "unknown row operation '" + kind + "'");
    }
  }
  return ops;
}

std::string format_relation(const PivotExpression& expr, const std::vector<Index>& free_indices) {
  std::string out = "x" + std::to_string(expr.pivot) + " = ";
  if (free_indices.empty()) return out + "0";
  for (std::size_t k = 0; k < free_indices.size(); ++k) {
    if (k > 0) out += " + ";
    out += format_scalar(expr.coefficients[k]) + "*x" + std::to_string(free_indices[k]);
  }
  return out;
}

std::vector<std::string> format_relations(const GraphRelations& rel) {
  std::vector<std::string> out;
  out.reserve(rel.pivot_exprs.size());
  for (const PivotExpression& expr : rel.pivot_exprs) out.push_back(format_relation(expr, rel.free_indices));
  return out;
}

}  // namespace rrefkit
