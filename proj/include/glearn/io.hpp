#pragma once

#include "glearn/glearner.hpp"
#include "glearn/market.hpp"

#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace glearn::io {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view s);

// Comma-separated table with a header row. No quoting: fields never contain commas.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column; throws if absent.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& file);

// Streams the rows of a large file, passing the named columns in the given order.
void scan_csv(const std::filesystem::path& file, const std::vector<std::string>& columns,
              const std::function<void(const std::vector<std::string_view>&)>& row);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& file, const std::vector<std::string>& header);
  ~CsvWriter() {
    if (f_) std::fclose(f_);
  }
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;
  CsvWriter& add(double v);
  CsvWriter& add(long long v);
  CsvWriter& add(int v) { return add(static_cast<long long>(v)); }
  CsvWriter& add(std::string_view v);
  CsvWriter& blank();
  void end_row();
  void close();

 private:
  std::FILE* f_ = nullptr;
  std::filesystem::path file_;
  std::size_t width_ = 0;
  std::size_t filled_ = 0;
  std::string line_;
};

// Long format path,period,asset,value with risky assets numbered from 1.
void write_return_panel(const std::filesystem::path& file, const std::vector<Mat>& panel);
std::vector<Mat> read_return_panel(const std::filesystem::path& file);

// Writes returns_expected.csv, returns_realized.csv, market.csv and universe.csv.
void write_returns(const std::filesystem::path& dir, const ReturnPaths& paths);
// bond_return is not stored in the files and must be supplied.
ReturnPaths read_returns(const std::filesystem::path& dir, double bond_return);

// row,col,value over the full matrix.
void write_matrix(const std::filesystem::path& file, const Mat& m);
Mat read_matrix(const std::filesystem::path& file);

// trajectories.csv: path,period,asset,x,u with u blank at period T.
// cash.csv: path,period,c.
void write_trajectories(const std::filesystem::path& dir, const std::vector<Trajectory>& trajs,
                        const std::string& stem = "trajectories", const std::string& cash_stem = "cash");
// Reads trajectories.csv; cash is recomputed as the sum of each action.
std::vector<Trajectory> read_trajectories(const std::filesystem::path& file);

// Binary plan file, little-endian:
//   "GLPLAN1\0", int32 horizon, int32 n, solver config, prior,
//   then per step: growth, reward coefficients, Q, F, F_soft, u_tilde, v_tilde, sigma_tilde,
//   inner iteration count; finally sigma_r_padded and the terminal covariance.
// Matrices are int64 rows, int64 cols, then column-major doubles.
void write_plan(const std::filesystem::path& file, const SolvedPlan& plan);
SolvedPlan read_plan(const std::filesystem::path& file);

}  // namespace glearn::io
