#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fourier_interp/interp_basis.hpp"

namespace fourier_interp {

/// %.17g rendering, which round-trips every double.
std::string format_real(double v);

/// Header n,x,a,a_hat,err_a,err_ahat; one row per (n, x), n major; LF endings.
void write_table_csv(const BasisTable& table, std::ostream& out);
BasisTable read_table_csv(std::istream& in);

/// {"max_n", "x_grid", "rows": [{"n", "x", "a", "a_hat", "err_a", "err_ahat"}...]}
void write_table_json(const BasisTable& table, std::ostream& out);
BasisTable read_table_json(std::istream& in);

void save_table(const BasisTable& table, const std::filesystem::path& path, const std::string& format);
BasisTable load_table(const std::filesystem::path& path);

}  // namespace fourier_interp
