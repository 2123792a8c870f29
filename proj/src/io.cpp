#include "glearn/io.hpp"

#include "glearn/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>

namespace glearn::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const fs::path& file, const std::string& msg) {
  throw ShapeError(file.string() + ": " + msg);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ShapeError("not an integer: '" + std::string(s) + "'");
  return v;
}

// Binary helpers.
class Out {
 public:
  explicit Out(const fs::path& file) : os_(file, std::ios::binary) {
    if (!os_) throw Error("cannot open " + file.string() + " for writing");
  }
  template <class T>
  void pod(T v) {
    os_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
  void mat(const Mat& m) {
    pod<std::int64_t>(m.rows());
    pod<std::int64_t>(m.cols());
    os_.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
  }
  void vec(const Vec& v) { mat(Mat(v)); }
  void coeffs(const FCoeffs& f) {
    mat(f.f_xx);
    vec(f.f_x);
    pod(f.f_0);
  }
  void finish(const fs::path& file) {
    os_.close();
    if (!os_) throw Error("write failed: " + file.string());
  }

 private:
  std::ofstream os_;
};

class In {
 public:
  explicit In(const fs::path& file) : file_(file), is_(file, std::ios::binary) {
    if (!is_) throw MissingInputError("missing input: " + file.string());
  }
  template <class T>
  T pod() {
    T v{};
    is_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is_) fail(file_, "truncated plan file");
    return v;
  }
  Mat mat() {
    const auto r = pod<std::int64_t>();
    const auto c = pod<std::int64_t>();
    if (r < 0 || c < 0 || r > 100000 || c > 100000) fail(file_, "corrupt matrix header");
    Mat m(r, c);
    is_.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
    if (!is_) fail(file_, "truncated plan file");
    return m;
  }
  Vec vec() {
    const Mat m = mat();
    if (m.cols() != 1) fail(file_, "expected a vector");
    return m.col(0);
  }
  FCoeffs coeffs() {
    FCoeffs f;
    f.f_xx = mat();
    f.f_x = vec();
    f.f_0 = pod<double>();
    return f;
  }
  void expect_end() {
    is_.peek();
    if (!is_.eof()) fail(file_, "trailing bytes in plan file");
  }

 private:
  fs::path file_;
  std::ifstream is_;
};

constexpr char kPlanMagic[8] = {'G', 'L', 'P', 'L', 'A', 'N', '1', '\0'};

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ShapeError("not a number: '" + std::string(s) + "'");
  return v;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ShapeError("missing column '" + std::string(name) + "'");
}

CsvTable read_csv(const fs::path& file) {
  std::ifstream is(file);
  if (!is) throw MissingInputError("missing input: " + file.string());
  CsvTable t;
  std::string line;
  if (!std::getline(is, line)) fail(file, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.header = split(line);
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    t.rows.push_back(split(line));
    if (t.rows.back().size() != t.header.size())
      fail(file, "row " + std::to_string(t.rows.size()) + " has " + std::to_string(t.rows.back().size()) +
                     " fields, header has " + std::to_string(t.header.size()));
  }
  return t;
}

void scan_csv(const fs::path& file, const std::vector<std::string>& columns,
              const std::function<void(const std::vector<std::string_view>&)>& row) {
  std::ifstream is(file);
  if (!is) throw MissingInputError("missing input: " + file.string());
  std::string line;
  if (!std::getline(is, line)) fail(file, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split(line);
  std::vector<std::size_t> index;
  for (const auto& c : columns) {
    const auto it = std::find(header.begin(), header.end(), c);
    if (it == header.end()) fail(file, "missing column '" + c + "'");
    index.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  std::vector<std::string_view> fields;
  std::vector<std::string_view> picked(columns.size());
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fields.clear();
    std::string_view rest(line);
    while (true) {
      const std::size_t comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != header.size())
      fail(file, "line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) + " fields, header has " +
                     std::to_string(header.size()));
    for (std::size_t i = 0; i < index.size(); ++i) picked[i] = fields[index[i]];
    row(picked);
  }
}

CsvWriter::CsvWriter(const fs::path& file, const std::vector<std::string>& header)
    : file_(file), width_(header.size()) {
  f_ = std::fopen(file.string().c_str(), "w");
  if (!f_) throw Error("cannot open " + file.string() + " for writing");
  for (const auto& h : header) add(std::string_view(h));
  end_row();
}

CsvWriter& CsvWriter::add(double v) { return add(std::string_view(format_double(v))); }

CsvWriter& CsvWriter::add(long long v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return add(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

CsvWriter& CsvWriter::add(std::string_view v) {
  if (filled_ == width_) throw Error(file_.string() + ": too many fields in row");
  if (filled_ > 0) line_.push_back(',');
  line_.append(v);
  ++filled_;
  return *this;
}

CsvWriter& CsvWriter::blank() { return add(std::string_view()); }

void CsvWriter::end_row() {
  if (filled_ != width_) throw Error(file_.string() + ": row has too few fields");
  line_.push_back('\n');
  if (std::fwrite(line_.data(), 1, line_.size(), f_) != line_.size()) throw Error("write failed: " + file_.string());
  line_.clear();
  filled_ = 0;
}

void CsvWriter::close() {
  if (!f_) return;
  const bool ok = std::fclose(f_) == 0;
  f_ = nullptr;
  if (!ok) throw Error("write failed: " + file_.string());
}

void write_return_panel(const fs::path& file, const std::vector<Mat>& panel) {
  CsvWriter w(file, {"path", "period", "asset", "value"});
  for (std::size_t p = 0; p < panel.size(); ++p)
    for (Eigen::Index t = 0; t < panel[p].rows(); ++t)
      for (Eigen::Index a = 0; a < panel[p].cols(); ++a) {
        w.add(static_cast<long long>(p)).add(static_cast<long long>(t)).add(static_cast<long long>(a + 1));
        w.add(panel[p](t, a));
        w.end_row();
      }
  w.close();
}

std::vector<Mat> read_return_panel(const fs::path& file) {
  struct Entry {
    long long p, t, a;
    double v;
  };
  std::vector<Entry> entries;
  long long n_paths = 0, horizon = 0, k = 0;
  scan_csv(file, {"path", "period", "asset", "value"}, [&](const std::vector<std::string_view>& f) {
    const Entry e{parse_int(f[0]), parse_int(f[1]), parse_int(f[2]) - 1, parse_double(f[3])};
    if (e.p < 0 || e.t < 0 || e.a < 0) fail(file, "negative index");
    n_paths = std::max(n_paths, e.p + 1);
    horizon = std::max(horizon, e.t + 1);
    k = std::max(k, e.a + 1);
    entries.push_back(e);
  });
  if (static_cast<long long>(entries.size()) != n_paths * horizon * k) fail(file, "incomplete (path, period, asset) grid");
  std::vector<Mat> panel(n_paths, Mat::Constant(horizon, k, std::numeric_limits<double>::quiet_NaN()));
  for (const Entry& e : entries) panel[e.p](e.t, e.a) = e.v;
  for (const auto& m : panel)
    if (m.hasNaN()) fail(file, "duplicate or missing rows");
  return panel;
}

void write_returns(const fs::path& dir, const ReturnPaths& paths) {
  paths.validate_shape();
  write_return_panel(dir / "returns_expected.csv", paths.expected);
  write_return_panel(dir / "returns_realized.csv", paths.realized);

  CsvWriter m(dir / "market.csv", {"path", "period", "r_m"});
  for (int p = 0; p < paths.n_paths; ++p)
    for (int t = 0; t < paths.horizon; ++t) {
      m.add(p).add(t).add(paths.market(p, t));
      m.end_row();
    }
  m.close();

  CsvWriter u(dir / "universe.csv", {"asset", "alpha", "beta", "price"});
  for (int a = 0; a < paths.n_risky; ++a) {
    u.add(a + 1).add(paths.universe.alpha[a]).add(paths.universe.beta[a]).add(paths.universe.prices[a]);
    u.end_row();
  }
  u.close();
}

ReturnPaths read_returns(const fs::path& dir, double bond_return) {
  ReturnPaths out;
  out.expected = read_return_panel(dir / "returns_expected.csv");
  out.realized = read_return_panel(dir / "returns_realized.csv");
  out.n_paths = static_cast<int>(out.expected.size());
  if (out.n_paths == 0) fail(dir / "returns_expected.csv", "no rows");
  out.horizon = static_cast<int>(out.expected.front().rows());
  out.n_risky = static_cast<int>(out.expected.front().cols());
  out.bond_return = bond_return;

  out.market = Mat::Zero(out.n_paths, out.horizon);
  if (fs::exists(dir / "market.csv")) {
    const CsvTable t = read_csv(dir / "market.csv");
    const std::size_t cp = t.column("path"), ct = t.column("period"), cr = t.column("r_m");
    for (const auto& row : t.rows) {
      const long long p = parse_int(row[cp]);
      const long long s = parse_int(row[ct]);
      if (p < 0 || p >= out.n_paths || s < 0 || s >= out.horizon) fail(dir / "market.csv", "index out of range");
      out.market(p, s) = parse_double(row[cr]);
    }
  }
  out.universe.alpha = Vec::Zero(out.n_risky);
  out.universe.beta = Vec::Zero(out.n_risky);
  out.universe.prices = Vec::Zero(out.n_risky);
  if (fs::exists(dir / "universe.csv")) {
    const CsvTable t = read_csv(dir / "universe.csv");
    const std::size_t ca = t.column("asset");
    for (const auto& row : t.rows) {
      const long long a = parse_int(row[ca]) - 1;
      if (a < 0 || a >= out.n_risky) fail(dir / "universe.csv", "asset out of range");
      out.universe.alpha[a] = parse_double(row[t.column("alpha")]);
      out.universe.beta[a] = parse_double(row[t.column("beta")]);
      out.universe.prices[a] = parse_double(row[t.column("price")]);
    }
  }
  out.validate_shape();
  return out;
}

void write_matrix(const fs::path& file, const Mat& m) {
  CsvWriter w(file, {"row", "col", "value"});
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      w.add(static_cast<long long>(i)).add(static_cast<long long>(j)).add(m(i, j));
      w.end_row();
    }
  w.close();
}

Mat read_matrix(const fs::path& file) {
  const CsvTable t = read_csv(file);
  const std::size_t cr = t.column("row"), cc = t.column("col"), cv = t.column("value");
  long long rows = 0;
  long long cols = 0;
  for (const auto& row : t.rows) {
    rows = std::max(rows, parse_int(row[cr]) + 1);
    cols = std::max(cols, parse_int(row[cc]) + 1);
  }
  if (static_cast<long long>(t.rows.size()) != rows * cols) fail(file, "incomplete matrix");
  Mat m = Mat::Constant(rows, cols, std::numeric_limits<double>::quiet_NaN());
  for (const auto& row : t.rows) {
    const long long i = parse_int(row[cr]);
    const long long j = parse_int(row[cc]);
    if (i < 0 || j < 0) fail(file, "negative index");
    m(i, j) = parse_double(row[cv]);
  }
  if (m.hasNaN()) fail(file, "duplicate or missing entries");
  return m;
}

void write_trajectories(const fs::path& dir, const std::vector<Trajectory>& trajs, const std::string& stem,
                        const std::string& cash_stem) {
  CsvWriter w(dir / (stem + ".csv"), {"path", "period", "asset", "x", "u"});
  for (std::size_t p = 0; p < trajs.size(); ++p) {
    const Trajectory& tr = trajs[p];
    const int horizon = tr.horizon();
    for (int t = 0; t <= horizon; ++t)
      for (Eigen::Index a = 0; a < tr.x.cols(); ++a) {
        w.add(static_cast<long long>(p)).add(t).add(static_cast<long long>(a)).add(tr.x(t, a));
        if (t < horizon)
          w.add(tr.u(t, a));
        else
          w.blank();
        w.end_row();
      }
  }
  w.close();

  CsvWriter c(dir / (cash_stem + ".csv"), {"path", "period", "c"});
  for (std::size_t p = 0; p < trajs.size(); ++p)
    for (int t = 0; t < trajs[p].horizon(); ++t) {
      c.add(static_cast<long long>(p)).add(t).add(trajs[p].cash[t]);
      c.end_row();
    }
  c.close();
}

std::vector<Trajectory> read_trajectories(const fs::path& file) {
  struct Entry {
    long long p, t, a;
    double x, u;
  };
  std::vector<Entry> entries;
  long long n_paths = 0, horizon = 0, n = 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  scan_csv(file, {"path", "period", "asset", "x", "u"}, [&](const std::vector<std::string_view>& f) {
    const Entry e{parse_int(f[0]), parse_int(f[1]), parse_int(f[2]), parse_double(f[3]),
                  f[4].empty() ? nan : parse_double(f[4])};
    if (e.p < 0 || e.t < 0 || e.a < 0) fail(file, "negative index");
    n_paths = std::max(n_paths, e.p + 1);
    horizon = std::max(horizon, e.t);
    n = std::max(n, e.a + 1);
    entries.push_back(e);
  });
  if (static_cast<long long>(entries.size()) != n_paths * (horizon + 1) * n)
    fail(file, "incomplete (path, period, asset) grid");
  std::vector<Trajectory> out(n_paths);
  for (auto& tr : out) {
    tr.x = Mat::Constant(horizon + 1, n, nan);
    tr.u = Mat::Constant(horizon, n, nan);
  }
  for (const Entry& e : entries) {
    out[e.p].x(e.t, e.a) = e.x;
    if (e.t < horizon) out[e.p].u(e.t, e.a) = e.u;
  }
  for (auto& tr : out) {
    if (tr.x.hasNaN() || tr.u.hasNaN()) fail(file, "duplicate or missing rows");
    tr.cash.resize(horizon);
    for (long long t = 0; t < horizon; ++t) {
      double c = 0.0;
      for (long long a = 0; a < n; ++a) c += tr.u(t, a);
      tr.cash[t] = c;
    }
  }
  return out;
}

void write_plan(const fs::path& file, const SolvedPlan& plan) {
  Out o(file);
  for (char c : kPlanMagic) o.pod(c);
  o.pod<std::int32_t>(plan.horizon);
  o.pod<std::int32_t>(plan.n);
  o.pod(plan.cfg.beta);
  o.pod(plan.cfg.gamma);
  o.pod<std::int32_t>(plan.cfg.max_inner_iters);
  o.pod(plan.cfg.inner_tol);
  o.pod<std::int32_t>(plan.cfg.omega_mode == OmegaMode::strict_paper ? 1 : 0);
  o.mat(plan.prior.sigma_p);
  for (int t = 0; t < plan.horizon; ++t) {
    o.vec(plan.prior.u_bar[t]);
    o.mat(plan.prior.v_bar[t]);
  }
  for (int t = 0; t < plan.horizon; ++t) {
    o.vec(plan.growth[t]);
    const RewardCoeffs& r = plan.reward[t];
    o.mat(r.r_xx);
    o.mat(r.r_ux);
    o.mat(r.r_uu);
    o.vec(r.r_x);
    o.vec(r.r_u);
    o.pod(r.r_0);
    o.mat(r.sigma_hat);
    const QCoeffs& q = plan.q[t];
    o.mat(q.q_xx);
    o.mat(q.q_ux);
    o.mat(q.q_uu);
    o.vec(q.q_x);
    o.vec(q.q_u);
    o.pod(q.q_0);
    o.mat(q.u_aux);
    o.vec(q.w_aux);
    o.mat(q.sigma_bar);
    o.coeffs(plan.f[t]);
    o.coeffs(plan.f_soft[t]);
    o.vec(plan.policy[t].u_tilde);
    o.mat(plan.policy[t].v_tilde);
    o.mat(plan.policy[t].sigma_tilde);
    o.pod<std::int32_t>(plan.inner_iterations[t]);
  }
  o.mat(plan.sigma_r_padded);
  o.mat(plan.sigma_tilde_terminal);
  o.finish(file);
}

SolvedPlan read_plan(const fs::path& file) {
  In in(file);
  for (char c : kPlanMagic)
    if (in.pod<char>() != c) fail(file, "not a plan file");
  SolvedPlan plan;
  plan.horizon = in.pod<std::int32_t>();
  plan.n = in.pod<std::int32_t>();
  if (plan.horizon < 1 || plan.n < 2) fail(file, "bad dimensions");
  plan.cfg.beta = in.pod<double>();
  plan.cfg.gamma = in.pod<double>();
  plan.cfg.max_inner_iters = in.pod<std::int32_t>();
  plan.cfg.inner_tol = in.pod<double>();
  plan.cfg.omega_mode = in.pod<std::int32_t>() == 1 ? OmegaMode::strict_paper : OmegaMode::derived;
  plan.prior.sigma_p = in.mat();
  for (int t = 0; t < plan.horizon; ++t) {
    plan.prior.u_bar.push_back(in.vec());
    plan.prior.v_bar.push_back(in.mat());
  }
  plan.prior.validate(plan.n, plan.horizon);
  const auto horizon = static_cast<std::size_t>(plan.horizon);
  plan.growth.resize(horizon);
  plan.reward.resize(horizon);
  plan.q.resize(horizon);
  plan.f.resize(horizon);
  plan.f_soft.resize(horizon);
  plan.policy.resize(horizon);
  plan.inner_iterations.resize(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    plan.growth[t] = in.vec();
    RewardCoeffs& r = plan.reward[t];
    r.r_xx = in.mat();
    r.r_ux = in.mat();
    r.r_uu = in.mat();
    r.r_x = in.vec();
    r.r_u = in.vec();
    r.r_0 = in.pod<double>();
    r.sigma_hat = in.mat();
    QCoeffs& q = plan.q[t];
    q.q_xx = in.mat();
    q.q_ux = in.mat();
    q.q_uu = in.mat();
    q.q_x = in.vec();
    q.q_u = in.vec();
    q.q_0 = in.pod<double>();
    q.u_aux = in.mat();
    q.w_aux = in.vec();
    q.sigma_bar = in.mat();
    plan.f[t] = in.coeffs();
    plan.f_soft[t] = in.coeffs();
    PolicyStep& s = plan.policy[t];
    s.u_tilde = in.vec();
    s.v_tilde = in.mat();
    s.sigma_tilde = in.mat();
    if (s.u_tilde.size() != plan.n || s.v_tilde.rows() != plan.n || s.v_tilde.cols() != plan.n ||
        s.sigma_tilde.rows() != plan.n || s.sigma_tilde.cols() != plan.n)
      fail(file, "policy shape mismatch at t=" + std::to_string(t));
    s.refactor();
    plan.inner_iterations[t] = in.pod<std::int32_t>();
  }
  plan.sigma_r_padded = in.mat();
  plan.sigma_tilde_terminal = in.mat();
  in.expect_end();
  return plan;
}

}  // namespace glearn::io
