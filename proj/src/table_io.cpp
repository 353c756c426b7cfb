#include "fourier_interp/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace fourier_interp {

namespace {

constexpr const char* kHeader = "n,x,a,a_hat,err_a,err_ahat";

struct Row {
  int n;
  double x, a, a_hat, err_a, err_ahat;
};

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw NumericalError(ErrorKind::InvalidArgument, "malformed number in table: '" + s + "'");
  }
  return v;
}

BasisTable assemble(const std::vector<Row>& rows) {
  if (rows.empty()) throw NumericalError(ErrorKind::ShapeMismatch, "table has no rows");
  std::map<int, std::map<double, Row>> by_n;
  std::vector<double> grid;
  for (const Row& r : rows) {
    if (r.n < 0) throw NumericalError(ErrorKind::ShapeMismatch, "negative basis index in table");
    if (by_n.empty() || r.n == by_n.begin()->first) grid.push_back(r.x);
    by_n[r.n][r.x] = r;
  }
  BasisTable t;
  t.max_n = by_n.rbegin()->first;
  t.x_grid = grid;
  const Eigen::Index rows_n = t.max_n + 1, cols = Eigen::Index(grid.size());
  if (Eigen::Index(by_n.size()) != rows_n || Eigen::Index(rows.size()) != rows_n * cols) {
    throw NumericalError(ErrorKind::ShapeMismatch, "table is not a full n by x grid");
  }
  t.a.resize(rows_n, cols);
  t.a_hat.resize(rows_n, cols);
  t.err_a.resize(rows_n, cols);
  t.err_ahat.resize(rows_n, cols);
  for (auto& [n, row] : by_n) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      auto it = row.find(grid[std::size_t(j)]);
      if (it == row.end()) throw NumericalError(ErrorKind::ShapeMismatch, "table row misses a grid point");
      t.a(n, j) = it->second.a;
      t.a_hat(n, j) = it->second.a_hat;
      t.err_a(n, j) = it->second.err_a;
      t.err_ahat(n, j) = it->second.err_ahat;
    }
  }
  return t;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_table_csv(const BasisTable& table, std::ostream& out) {
  out << kHeader << '\n';
  for (int n = 0; n <= table.max_n; ++n) {
    for (std::size_t j = 0; j < table.x_grid.size(); ++j) {
      const Eigen::Index c = Eigen::Index(j);
      out << n << ',' << format_real(table.x_grid[j]) << ',' << format_real(table.a(n, c)) << ','
          << format_real(table.a_hat(n, c)) << ',' << format_real(table.err_a(n, c)) << ','
          << format_real(table.err_ahat(n, c)) << '\n';
    }
  }
}

BasisTable read_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw NumericalError(ErrorKind::ShapeMismatch, "CSV header must be " + std::string(kHeader));
  }
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw NumericalError(ErrorKind::ShapeMismatch, "CSV row needs six fields");
    rows.push_back({int(parse_real(cells[0])), parse_real(cells[1]), parse_real(cells[2]), parse_real(cells[3]),
                    parse_real(cells[4]), parse_real(cells[5])});
  }
  return assemble(rows);
}

void write_table_json(const BasisTable& table, std::ostream& out) {
  // Numbers are written by hand so the 17-digit rendering matches the CSV.
  out << "{\n  \"max_n\": " << table.max_n << ",\n  \"x_grid\": [";
  for (std::size_t j = 0; j < table.x_grid.size(); ++j) out << (j ? ", " : "") << format_real(table.x_grid[j]);
  out << "],\n  \"rows\": [";
  bool first = true;
  for (int n = 0; n <= table.max_n; ++n) {
    for (std::size_t j = 0; j < table.x_grid.size(); ++j) {
      const Eigen::Index c = Eigen::Index(j);
      out << (first ? "\n" : ",\n") << "    {\"n\": " << n << ", \"x\": " << format_real(table.x_grid[j])
          << ", \"a\": " << format_real(table.a(n, c)) << ", \"a_hat\": " << format_real(table.a_hat(n, c))
          << ", \"err_a\": " << format_real(table.err_a(n, c))
          << ", \"err_ahat\": " << format_real(table.err_ahat(n, c)) << "}";
      first = false;
    }
  }
  out << "\n  ]\n}\n";
}

BasisTable read_table_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw NumericalError(ErrorKind::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
  std::vector<Row> rows;
  for (const auto& r : doc.at("rows")) {
    rows.push_back({r.at("n").get<int>(), r.at("x").get<double>(), r.at("a").get<double>(),
                    r.at("a_hat").get<double>(), r.at("err_a").get<double>(), r.at("err_ahat").get<double>()});
  }
  BasisTable t = assemble(rows);
  if (doc.at("max_n").get<int>() != t.max_n) throw NumericalError(ErrorKind::ShapeMismatch, "max_n disagrees with rows");
  return t;
}

void save_table(const BasisTable& table, const std::filesystem::path& path, const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericalError(ErrorKind::InvalidArgument, "cannot open " + path.string() + " for writing");
  if (format == "json") {
    write_table_json(table, out);
  } else if (format == "csv") {
    write_table_csv(table, out);
  } else {
    throw NumericalError(ErrorKind::InvalidArgument, "unknown table format " + format);
  }
}

BasisTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NumericalError(ErrorKind::InvalidArgument, "cannot open " + path.string());
  return path.extension() == ".json" ? read_table_json(in) : read_table_csv(in);
}

}  // namespace fourier_interp
