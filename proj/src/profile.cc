#include "stablewelfare/profile.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "stablewelfare/error.h"

namespace stablewelfare {
namespace {

void CheckShape(const Matrix& m, size_t n, const char* name) {
  if (m.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(name) + " has " + std::to_string(m.size()) +
                    " rows, expected " + std::to_string(n));
  }
  for (size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(name) + " row " + std::to_string(r) + " has " +
                      std::to_string(m[r].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
}

void CheckRows(const Matrix& m, const char* name) {
  for (size_t r = 0; r < m.size(); ++r) {
    for (size_t c = 0; c < m[r].size(); ++c) {
      if (!std::isfinite(m[r][c])) {
        throw Error(ErrorCode::kNonFinite, std::string(name) + "[" +
                                               std::to_string(r) + "][" +
                                               std::to_string(c) + "]");
      }
    }
    std::vector<double> sorted = m[r];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kTiedUtilities,
                  std::string(name) + " row " + std::to_string(r) +
                      " contains equal utilities");
    }
  }
}

std::vector<int> PreferenceLists(const std::vector<double>& flat, int n) {
  std::vector<int> prefs(flat.size());
  for (int r = 0; r < n; ++r) {
    auto row = prefs.begin() + r * n;
    std::iota(row, row + n, 0);
    const double* u = flat.data() + r * n;
    std::sort(row, row + n, [u](int a, int b) { return u[a] > u[b]; });
  }
  return prefs;
}

std::vector<double> Flatten(const Matrix& m) {
  std::vector<double> flat;
  flat.reserve(m.size() * m.size());
  for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

Matrix Unflatten(const std::vector<double>& flat, int n) {
  Matrix m(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    m[r].assign(flat.begin() + r * n, flat.begin() + (r + 1) * n);
  }
  return m;
}

}  // namespace

Side Other(Side side) {
  return side == Side::kAgents ? Side::kArms : Side::kAgents;
}

UtilityProfile UtilityProfile::FromMatrices(const Matrix& agent_utilities,
                                            const Matrix& arm_utilities) {
  const size_t n = agent_utilities.size();
  if (n == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "market must have n >= 1");
  }
  CheckShape(agent_utilities, n, "agent_utilities");
  CheckShape(arm_utilities, n, "arm_utilities");
  CheckRows(agent_utilities, "agent_utilities");
  CheckRows(arm_utilities, "arm_utilities");

  UtilityProfile p;
  p.n_ = static_cast<int>(n);
  p.agent_ = Flatten(agent_utilities);
  p.arm_ = Flatten(arm_utilities);
  p.agent_prefs_ = PreferenceLists(p.agent_, p.n_);
  p.arm_prefs_ = PreferenceLists(p.arm_, p.n_);
  return p;
}

Matrix UtilityProfile::agent_matrix() const { return Unflatten(agent_, n_); }
Matrix UtilityProfile::arm_matrix() const { return Unflatten(arm_, n_); }

UtilityProfile UtilityProfile::Transposed() const {
  UtilityProfile p = *this;
  std::swap(p.agent_, p.arm_);
  std::swap(p.agent_prefs_, p.arm_prefs_);
  return p;
}

UtilityProfile ValidateProfile(const Matrix& agent_utilities,
                               const Matrix& arm_utilities) {
  UtilityProfile p = UtilityProfile::FromMatrices(agent_utilities, arm_utilities);
  for (const Matrix* m : {&agent_utilities, &arm_utilities}) {
    for (size_t r = 0; r < m->size(); ++r) {
      for (size_t c = 0; c < (*m)[r].size(); ++c) {
        if ((*m)[r][c] < 0.0) {
          throw Error(ErrorCode::kNegativeUtility,
                      std::string(m == &agent_utilities ? "agent_utilities"
                                                        : "arm_utilities") +
                          "[" + std::to_string(r) + "][" + std::to_string(c) +
                          "] is negative");
        }
      }
    }
  }
  return p;
}

}  // namespace stablewelfare
