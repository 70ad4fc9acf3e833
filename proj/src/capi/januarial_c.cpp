// extern "C" surface over the januarial core. Exceptions never cross this
// boundary: each entry point runs inside guarded(), which maps core errors to
// jan_status and records the message for jan_last_error_message().

#include "januarial/januarial.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "januarial/census.hpp"
#include "januarial/construct.hpp"
#include "januarial/diagram.hpp"
#include "januarial/error.hpp"
#include "januarial/field.hpp"
#include "januarial/gk.hpp"
#include "januarial/oracle.hpp"
#include "januarial/pgl2.hpp"

struct jan_diagram {
  januarial::GeneratorPair pair;
  januarial::CosetDiagram diagram;
};

struct jan_census {
  januarial::Census census;
};

struct jan_report {
  januarial::OracleReport report;
};

namespace {

thread_local std::string g_last_error;

class StatusError : public std::exception {
 public:
  StatusError(jan_status status, std::string message) : status_(status), message_(std::move(message)) {}
  jan_status status() const noexcept { return status_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  jan_status status_;
  std::string message_;
};

jan_status map_code(januarial::ErrorCode code) {
  using januarial::ErrorCode;
  switch (code) {
    case ErrorCode::kDomain: return JAN_ERR_DOMAIN;
    case ErrorCode::kZeroInverse: return JAN_ERR_ZERO_INVERSE;
    case ErrorCode::kOrderOverflow: return JAN_ERR_ORDER_OVERFLOW;
    case ErrorCode::kNoOrderLElement: return JAN_ERR_NO_ORDER_L_ELEMENT;
    case ErrorCode::kSearchExhausted: return JAN_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::kOrderMismatch: return JAN_ERR_ORDER_MISMATCH;
    case ErrorCode::kParity: return JAN_ERR_PARITY;
    case ErrorCode::kDisconnected: return JAN_ERR_DISCONNECTED;
    case ErrorCode::kNonIntegralGenus: return JAN_ERR_NON_INTEGRAL_GENUS;
    case ErrorCode::kSizeLimit: return JAN_ERR_SIZE_LIMIT;
    case ErrorCode::kNotFound: return JAN_ERR_NOT_FOUND;
    case ErrorCode::kSplitting: return JAN_ERR_SPLITTING;
  }
  return JAN_ERR_INTERNAL;
}

template <typename F>
jan_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return JAN_OK;
  } catch (const StatusError& err) {
    g_last_error = err.what();
    return err.status();
  } catch (const januarial::Error& err) {
    g_last_error = err.what();
    return map_code(err.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return JAN_ERR_INTERNAL;
  } catch (const std::exception& err) {
    g_last_error = err.what();
    return JAN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return JAN_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) throw StatusError(JAN_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

template <typename T, typename U>
void copy_out(std::span<const U> values, T* buffer, std::size_t capacity, std::size_t* length) {
  require(length, "length");
  *length = values.size();
  if (values.size() > capacity) {
    throw StatusError(JAN_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) + " of " +
                                                    std::to_string(values.size()) + " values");
  }
  if (!values.empty()) require(buffer, "buffer");
  std::transform(values.begin(), values.end(), buffer, [](const U& v) { return static_cast<T>(v); });
}

void copy_text(const std::string& text, char* buffer, std::size_t capacity, std::size_t* length) {
  require(length, "length");
  *length = text.size();
  if (text.size() + 1 > capacity) {
    throw StatusError(JAN_ERR_BUFFER_TOO_SMALL, "text needs " + std::to_string(text.size() + 1) + " bytes");
  }
  require(buffer, "buffer");
  std::memcpy(buffer, text.c_str(), text.size() + 1);
}

void copy_theta_set(const januarial::ThetaSet& set, uint64_t* buffer, std::size_t capacity, std::size_t* length) {
  const auto residues = set.residues();
  copy_out<uint64_t, std::uint64_t>(residues, buffer, capacity, length);
}

januarial::PglElement pgl_from(januarial::PrimeModulus p, const int64_t m[4]) {
  return januarial::PglElement(januarial::Matrix2::from_ints(p, m[0], m[1], m[2], m[3]));
}

}  // namespace

extern "C" {

const char* jan_version(void) { return "1.0.0"; }

const char* jan_status_name(jan_status status) {
  switch (status) {
    case JAN_OK: return "OK";
    case JAN_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case JAN_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case JAN_ERR_DOMAIN: return "DomainError";
    case JAN_ERR_ZERO_INVERSE: return "ZeroInverse";
    case JAN_ERR_ORDER_OVERFLOW: return "OrderOverflow";
    case JAN_ERR_NO_ORDER_L_ELEMENT: return "NoOrderLElement";
    case JAN_ERR_SEARCH_EXHAUSTED: return "SearchExhausted";
    case JAN_ERR_ORDER_MISMATCH: return "OrderMismatch";
    case JAN_ERR_PARITY: return "ParityError";
    case JAN_ERR_DISCONNECTED: return "DisconnectedError";
    case JAN_ERR_NON_INTEGRAL_GENUS: return "NonIntegralGenus";
    case JAN_ERR_SIZE_LIMIT: return "SizeLimit";
    case JAN_ERR_NOT_FOUND: return "NotFound";
    case JAN_ERR_SPLITTING: return "SplittingViolation";
    case JAN_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* jan_last_error_message(void) { return g_last_error.c_str(); }

jan_status jan_is_prime(uint64_t n, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = januarial::is_prime(n) ? 1 : 0;
  });
}

jan_status jan_field_inverse(uint64_t p, uint64_t x, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    const januarial::PrimeModulus m(p);
    *out = januarial::field_inverse(januarial::FieldElement::from_residue(x, m)).value();
  });
}

jan_status jan_sqrt_mod_p(uint64_t p, uint64_t x, int* has_root, uint64_t roots[2]) {
  return guarded([&] {
    require(has_root, "has_root");
    require(roots, "roots");
    const januarial::PrimeModulus m(p);
    const auto r = januarial::sqrt_mod_p(januarial::FieldElement::from_residue(x, m));
    *has_root = r ? 1 : 0;
    if (r) {
      roots[0] = r->first.value();
      roots[1] = r->second.value();
    }
  });
}

jan_status jan_euler_phi(uint64_t n, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = januarial::euler_phi(n);
  });
}

jan_status jan_gk_coefficients(uint64_t k, int64_t* coefficients, size_t capacity, size_t* length) {
  return guarded([&] {
    const auto poly = januarial::gk_coefficients(k);
    copy_out<int64_t, std::int64_t>(poly.coefficients, coefficients, capacity, length);
  });
}

jan_status jan_gk_coefficients_mod(uint64_t k, uint64_t p, uint64_t* coefficients, size_t capacity,
                                   size_t* length) {
  return guarded([&] {
    const auto reduced = januarial::gk_coefficients_mod(k, januarial::PrimeModulus(p));
    std::vector<std::uint64_t> residues;
    for (const auto& c : reduced) residues.push_back(c.value());
    copy_out<uint64_t, std::uint64_t>(residues, coefficients, capacity, length);
  });
}

jan_status jan_gk_format(uint64_t k, char* buffer, size_t capacity, size_t* length) {
  return guarded([&] { copy_text(januarial::format_gk(januarial::gk_coefficients(k)), buffer, capacity, length); });
}

jan_status jan_gk_roots(uint64_t k, uint64_t p, uint64_t* roots, size_t capacity, size_t* length) {
  return guarded([&] { copy_theta_set(januarial::gk_roots(k, januarial::PrimeModulus(p)), roots, capacity, length); });
}

jan_status jan_januarial_thetas(uint64_t p, uint64_t* thetas, size_t capacity, size_t* length) {
  return guarded(
      [&] { copy_theta_set(januarial::januarial_thetas(januarial::PrimeModulus(p)), thetas, capacity, length); });
}

jan_status jan_expected_count(uint64_t k, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = januarial::expected_count(k);
  });
}

jan_status jan_find_order_trace(uint64_t p, uint64_t l, uint64_t* b) {
  return guarded([&] {
    require(b, "b");
    *b = januarial::find_order_trace(januarial::PrimeModulus(p), l).value();
  });
}

jan_status jan_theta_invariant(uint64_t p, const int64_t x[4], const int64_t y[4], uint64_t* theta) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(theta, "theta");
    const januarial::PrimeModulus m(p);
    *theta = januarial::theta_invariant(pgl_from(m, x), pgl_from(m, y)).value();
  });
}

jan_status jan_diagram_build(uint64_t p, uint64_t l, uint64_t theta, jan_diagram** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const januarial::PrimeModulus m(p);
    if (theta >= p) throw StatusError(JAN_ERR_DOMAIN, "theta must be a residue in [0, p)");
    auto pair = januarial::solve_generators(m, l, januarial::FieldElement::from_residue(theta, m));
    auto diagram = januarial::build_diagram(pair);
    *out = new jan_diagram{std::move(pair), std::move(diagram)};
  });
}

void jan_diagram_free(jan_diagram* diagram) { delete diagram; }

jan_status jan_diagram_get_info(const jan_diagram* diagram, jan_diagram_info* out) {
  return guarded([&] {
    require(diagram, "diagram");
    require(out, "out");
    const auto& d = diagram->diagram;
    const auto& q = diagram->pair.params;
    jan_diagram_info info{};
    info.p = d.p;
    info.l = d.ell;
    info.k = d.k;
    info.theta = d.theta;
    info.delta = q.delta.value();
    info.r = q.r.value();
    const auto x = q.x_matrix().residues();
    const auto y = q.y_matrix().residues();
    std::copy(x.begin(), x.end(), info.x_matrix);
    std::copy(y.begin(), y.end(), info.y_matrix);
    info.eta_x = d.eta_x;
    info.eta_y = d.eta_y;
    info.eta_xy = d.eta_xy;
    info.y_cycle_count = d.y_cycles.size();
    info.x_edge_count = d.x_edges.size();
    info.xy_orbit_count = d.xy_orbits.size();
    info.component_count = d.component_count;
    info.connected = d.connected ? 1 : 0;
    info.is_januarial = januarial::is_januarial(d) ? 1 : 0;
    *out = info;
  });
}

jan_status jan_diagram_get_genus(const jan_diagram* diagram, jan_genus* out) {
  return guarded([&] {
    require(diagram, "diagram");
    require(out, "out");
    const auto g = januarial::genus_breakdown(diagram->diagram);
    *out = jan_genus{g.v, g.e, g.f, g.higman, g.fixedpoint, g.januarial.value_or(0), g.januarial ? 1 : 0};
  });
}

jan_status jan_diagram_permutation(const jan_diagram* diagram, jan_generator which, uint64_t* images,
                                   size_t capacity, size_t* length) {
  return guarded([&] {
    require(diagram, "diagram");
    const januarial::PointPermutation* perm = nullptr;
    switch (which) {
      case JAN_GEN_X: perm = &diagram->pair.xperm; break;
      case JAN_GEN_Y: perm = &diagram->pair.yperm; break;
      case JAN_GEN_XY: perm = &diagram->pair.xyperm; break;
    }
    if (perm == nullptr) throw StatusError(JAN_ERR_INVALID_ARGUMENT, "unknown generator");
    copy_out<uint64_t, std::size_t>(perm->images(), images, capacity, length);
  });
}

jan_status jan_diagram_verify(const jan_diagram* diagram, int* passed) {
  return guarded([&] {
    require(diagram, "diagram");
    require(passed, "passed");
    *passed = januarial::verify_pair(diagram->pair).passed() ? 1 : 0;
  });
}

jan_status jan_diagram_export(const jan_diagram* diagram, jan_format format, char* buffer, size_t capacity,
                              size_t* length) {
  return guarded([&] {
    require(diagram, "diagram");
    std::string text;
    switch (format) {
      case JAN_FORMAT_TEXT: text = januarial::export_text(diagram->diagram, diagram->pair); break;
      case JAN_FORMAT_JSON: text = januarial::export_json(diagram->diagram, diagram->pair); break;
      case JAN_FORMAT_DOT: text = januarial::export_dot(diagram->diagram); break;
      default: throw StatusError(JAN_ERR_INVALID_ARGUMENT, "unknown format");
    }
    copy_text(text, buffer, capacity, length);
  });
}

jan_status jan_genus_higman(int64_t v, int64_t e, int64_t f, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = januarial::genus_higman(v, e, f);
  });
}

jan_status jan_genus_fixedpoint(int64_t p, int64_t k, int64_t l, int64_t eta_x, int64_t eta_y, int64_t eta_xy,
                                int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = januarial::genus_fixedpoint(p, k, l, eta_x, eta_y, eta_xy);
  });
}

jan_status jan_genus_januarial(int64_t p, int64_t l, int64_t eta_x, int64_t eta_y, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = januarial::genus_januarial(p, l, eta_x, eta_y);
  });
}

jan_status jan_census_run(uint64_t pmin, uint64_t pmax, uint64_t l, jan_census** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new jan_census{januarial::sweep_januarials(pmin, pmax, l)};
  });
}

void jan_census_free(jan_census* census) { delete census; }

jan_status jan_census_csv(const jan_census* census, char* buffer, size_t capacity, size_t* length) {
  return guarded([&] {
    require(census, "census");
    copy_text(januarial::census_csv(census->census), buffer, capacity, length);
  });
}

jan_status jan_census_trailer(const jan_census* census, char* buffer, size_t capacity, size_t* length) {
  return guarded([&] {
    require(census, "census");
    copy_text(januarial::census_trailer(census->census), buffer, capacity, length);
  });
}

jan_status jan_census_summary(const jan_census* census, uint64_t* found, uint64_t* predicted, int* matches) {
  return guarded([&] {
    require(census, "census");
    if (found) *found = census->census.total_found();
    if (predicted) *predicted = census->census.total_predicted();
    if (matches) *matches = census->census.matches_prediction() ? 1 : 0;
  });
}

jan_status jan_oracle_class_count(uint64_t q, uint64_t order, int force, uint64_t* count) {
  return guarded([&] {
    require(count, "count");
    *count = januarial::count_classes_of_order(januarial::PrimeModulus(q), order, force != 0).class_count;
  });
}

jan_status jan_oracle_cyclic_orbits(uint64_t q, int* passed) {
  return guarded([&] {
    require(passed, "passed");
    *passed = januarial::cyclic_orbit_check(januarial::PrimeModulus(q)).passed ? 1 : 0;
  });
}

jan_status jan_oracle_thetas(uint64_t p, uint64_t l, int force, uint64_t* thetas, size_t capacity, size_t* length) {
  return guarded([&] {
    copy_theta_set(januarial::brute_force_thetas(januarial::PrimeModulus(p), l, force != 0), thetas, capacity,
                   length);
  });
}

jan_status jan_verify(uint64_t p, uint64_t l, int force, jan_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    std::optional<std::uint64_t> ell;
    if (l != 0) ell = l;
    *out = new jan_report{januarial::run_verification(januarial::PrimeModulus(p), ell, force != 0)};
  });
}

void jan_report_free(jan_report* report) { delete report; }

jan_status jan_report_text(const jan_report* report, char* buffer, size_t capacity, size_t* length) {
  return guarded([&] {
    require(report, "report");
    copy_text(report->report.text(), buffer, capacity, length);
  });
}

jan_status jan_report_passed(const jan_report* report, int* passed) {
  return guarded([&] {
    require(report, "report");
    require(passed, "passed");
    *passed = report->report.passed() ? 1 : 0;
  });
}

}  // extern "C"
