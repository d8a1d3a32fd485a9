#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexcount/closedform.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/matrix.hpp"
#include "hexcount/oracle.hpp"
#include "hexcount/params.hpp"

namespace hexcount {

/// Counting routes. brute walks path families, brute_pp fills plane partitions.
enum class Method { formula, det, det_condense, brute, brute_pp };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::formula:
      return "formula";
    case Method::det:
      return "det";
    case Method::det_condense:
      return "det-condense";
    case Method::brute:
      return "brute";
    case Method::brute_pp:
      return "brute-pp";
  }
  return "?";
}

inline Method parse_method(std::string_view name) {
  for (Method m : {Method::formula, Method::det, Method::det_condense, Method::brute, Method::brute_pp}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

inline bool is_brute(Method m) { return m == Method::brute || m == Method::brute_pp; }

struct MethodResult {
  Method method;
  std::optional<ExactInt> value;
  /// Why there is no value: budget exhausted, or the route itself failed.
  std::string notice;
  bool budget_exhausted = false;
};

struct InstanceReport {
  HexagonParams params;
  std::vector<MethodResult> results;
  std::uint64_t budget_used = 0;
  double seconds = 0.0;

  /// All methods that produced a value agree, and none failed outright.
  bool agree() const {
    const ExactInt* first = nullptr;
    for (const auto& r : results) {
      if (!r.value) {
        if (!r.budget_exhausted) return false;
        continue;
      }
      if (first && *first != *r.value) return false;
      if (!first) first = &*r.value;
    }
    return true;
  }

  bool budget_exhausted() const {
    for (const auto& r : results)
      if (r.budget_exhausted) return true;
    return false;
  }
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Nonzero corrupts the formula route (harness self-test only).
  int fault_shift = 0;
};

/// Runs each method on `p`. The brute routes share one budget; exhausting it
/// marks that route as skipped rather than failing the instance.
inline InstanceReport run_methods(const HexagonParams& p, const std::vector<Method>& methods,
                                  const VerifyOptions& options = {}) {
  validate(p);
  const auto started = std::chrono::steady_clock::now();
  InstanceReport report{p, {}, 0, 0.0};
  Budget budget(options.budget);
  std::optional<CountMatrix> m;
  auto matrix = [&]() -> const CountMatrix& {
    if (!m) m = build_matrix_M(p);
    return *m;
  };
  for (Method method : methods) {
    MethodResult result{method, std::nullopt, {}, false};
    try {
      switch (method) {
        case Method::formula:
          result.value = detail::theorem1_value(p, options.fault_shift);
          break;
        case Method::det:
          result.value = det_elimination(matrix());
          break;
        case Method::det_condense:
          result.value = det_condensation(matrix());
          break;
        case Method::brute:
          result.value = enumerate_path_families(p, budget);
          break;
        case Method::brute_pp:
          result.value = enumerate_constrained_pp(p, budget);
          break;
      }
    } catch (const ResourceError& e) {
      result.notice = e.what();
      result.budget_exhausted = true;
    } catch (const std::logic_error& e) {
      result.notice = e.what();
    }
    report.results.push_back(std::move(result));
  }
  report.budget_used = budget.used();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace hexcount
