#include "isodim/matrix_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "isodim/errors.hpp"

namespace isodim {

namespace {

std::vector<std::string> split_whitespace(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.size() > 9 ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": bad count '" + token + "'");
  }
  return std::stoul(token);
}

}  // namespace

Matrix parse_matrix_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<FieldSpec> spec;
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  std::vector<Vector> rows;

  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!spec) {
      if (tokens.size() != 2 || tokens[0] != "field") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'field GF(p)' or 'field Q'");
      }
      try {
        spec = FieldSpec::parse(tokens[1]);
      } catch (const DomainError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (!shape) {
      if (tokens.size() != 3 || tokens[0] != "matrix") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'matrix R C'");
      }
      shape = {parse_count(tokens[1], line_no), parse_count(tokens[2], line_no)};
      // a row of zero scalars would be a blank line, so zero-column rows are implied
      if (shape->second == 0) rows.assign(shape->first, Vector{});
    } else {
      if (rows.size() == shape->first) {
        throw ParseError("line " + std::to_string(line_no) + ": more than " +
                         std::to_string(shape->first) + " data rows");
      }
      if (tokens.size() != shape->second) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(shape->second) + " entries, got " +
                         std::to_string(tokens.size()));
      }
      Vector row;
      row.reserve(tokens.size());
      for (const auto& t : tokens) {
        try {
          row.push_back(FieldElement::parse(t, *spec));
        } catch (const DivisionByZeroError& e) {
          throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const ParseError& e) {
          throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      rows.push_back(std::move(row));
    }
  }
  if (!spec) throw ParseError("missing 'field' header");
  if (!shape) throw ParseError("missing 'matrix R C' line");
  if (rows.size() != shape->first) {
    throw ParseError("expected " + std::to_string(shape->first) + " data rows, got " +
                     std::to_string(rows.size()));
  }
  return Matrix::from_rows(*spec, shape->second, rows);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_file(buffer.str());
}

std::string format_matrix_file(const Matrix& m) {
  std::string out = "field " + m.spec().to_string() + "\n";
  out += "matrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  if (m.cols() == 0) return out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).format();
    }
    out += '\n';
  }
  return out;
}

}  // namespace isodim
