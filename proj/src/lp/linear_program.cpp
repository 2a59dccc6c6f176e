#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"

namespace pathattack {

LinearProgram::LinearProgram(int num_vars) {
  for (int i = 0; i < num_vars; ++i) add_var(0.0);
}

int LinearProgram::add_var(double cost, double lo, double hi, bool binary, std::string name) {
  if (!std::isfinite(lo) || lo > hi || std::isnan(hi)) throw InvalidParameter("bad variable bounds");
  objective_.push_back(cost);
  lo_.push_back(lo);
  hi_.push_back(hi);
  binary_.push_back(binary ? 1 : 0);
  if (name.empty()) name = "x" + std::to_string(objective_.size() - 1);
  names_.push_back(std::move(name));
  return num_vars() - 1;
}

void LinearProgram::set_bounds(int var, double lo, double hi) {
  if (!std::isfinite(lo) || lo > hi || std::isnan(hi)) throw InvalidParameter("bad variable bounds");
  lo_.at(var) = lo;
  hi_.at(var) = hi;
}

int LinearProgram::add_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs,
                           std::string name) {
  for (const auto& [var, c] : coeffs) {
    if (var < 0 || var >= num_vars()) throw InvalidParameter("row references unknown variable");
    if (!std::isfinite(c)) throw InvalidParameter("non-finite coefficient");
  }
  if (!std::isfinite(rhs)) throw InvalidParameter("non-finite right-hand side");
  if (name.empty()) name = "r" + std::to_string(rows_.size());
  rows_.push_back({std::move(coeffs), sense, rhs, std::move(name)});
  return num_rows() - 1;
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars(); ++j) {
    worst = std::max({worst, lo_[j] - x[j], x[j] - hi_[j]});
  }
  for (const auto& row : rows_) {
    double lhs = 0.0;
    for (const auto& [var, c] : row.coeffs) lhs += c * x[var];
    const double gap = lhs - row.rhs;
    switch (row.sense) {
      case Sense::kLe: worst = std::max(worst, gap); break;
      case Sense::kGe: worst = std::max(worst, -gap); break;
      case Sense::kEq: worst = std::max(worst, std::abs(gap)); break;
    }
  }
  return worst;
}

double LinearProgram::evaluate(const std::vector<double>& x) const {
  double sum = 0.0;
  for (int j = 0; j < num_vars(); ++j) sum += objective_[j] * x[j];
  return sum;
}

void write_lp_format(const LinearProgram& lp, std::ostream& out) {
  out << std::setprecision(17);
  auto term = [&](double c, const std::string& name, bool first) {
    if (c < 0) {
      out << "- ";
    } else if (!first) {
      out << "+ ";
    }
    const double a = std::abs(c);
    if (a != 1.0) out << a << ' ';
    out << name;
  };
  out << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.objective()[j] == 0.0) continue;
    out << ' ';
    term(lp.objective()[j], lp.var_name(j), first);
    first = false;
  }
  if (first) out << " 0 " << (lp.num_vars() > 0 ? lp.var_name(0) : "x0");
  out << "\nSubject To\n";
  for (const auto& row : lp.rows()) {
    out << ' ' << row.name << ':';
    bool f = true;
    for (const auto& [var, c] : row.coeffs) {
      out << ' ';
      term(c, lp.var_name(var), f);
      f = false;
    }
    if (f) out << " 0 " << (lp.num_vars() > 0 ? lp.var_name(0) : "x0");
    const char* op = row.sense == Sense::kLe ? "<=" : row.sense == Sense::kGe ? ">=" : "=";
    out << ' ' << op << ' ' << row.rhs << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_vars(); ++j) {
    out << ' ' << lp.lo(j) << " <= " << lp.var_name(j) << " <= ";
    if (std::isinf(lp.hi(j))) {
      out << "+inf\n";
    } else {
      out << lp.hi(j) << '\n';
    }
  }
  bool any_binary = false;
  for (int j = 0; j < lp.num_vars(); ++j) any_binary = any_binary || lp.binary(j);
  if (any_binary) {
    out << "Binaries\n";
    for (int j = 0; j < lp.num_vars(); ++j) {
      if (lp.binary(j)) out << ' ' << lp.var_name(j) << '\n';
    }
  }
  out << "End\n";
}

std::string to_lp_format(const LinearProgram& lp) {
  std::ostringstream out;
  write_lp_format(lp, out);
  return out.str();
}

}  // namespace pathattack
