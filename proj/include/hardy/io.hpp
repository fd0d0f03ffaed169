#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "hardy/analytic_fn.hpp"
#include "hardy/basis_lab.hpp"
#include "hardy/certify.hpp"
#include "hardy/peak.hpp"

namespace hardy::io {

using json = nlohmann::json;

// Malformed input document; `pointer` is the JSON pointer of the bad field.
class InputError : public DomainError {
 public:
  InputError(std::string pointer, const std::string& what)
      : DomainError(what + " (at " + (pointer.empty() ? std::string("/") : pointer) + ")"),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

std::string child(const std::string& pointer, const std::string& key);
std::string child(const std::string& pointer, std::size_t index);

const json& member(const json& obj, const std::string& key, const std::string& pointer);
bool has(const json& obj, const std::string& key);

double read_number(const json& j, const std::string& pointer);  // also "inf"
long long read_integer(const json& j, const std::string& pointer);
cplx read_complex(const json& j, const std::string& pointer);   // [re, im] or a real
std::vector<cplx> read_complex_list(const json& j, const std::string& pointer);
std::vector<double> read_number_list(const json& j, const std::string& pointer);

json complex_json(cplx z);
json complex_list_json(const std::vector<cplx>& zs);
json number_json(double x);  // inf and nan become strings

json fn_to_json(const AnalyticFn& f);
AnalyticFn fn_from_json(const json& j, const std::string& pointer = "");

json bound_json(const CertifiedBound& b, const std::string& tag);

json matrix_json(const Eigen::MatrixXcd& m);  // list of columns
Eigen::MatrixXcd matrix_from_json(const json& j, const std::string& pointer);

json system_json(const FiniteSystem& s);
FiniteSystem system_from_json(const json& j, const std::string& pointer = "");

json arc_system_json(const ArcSystem& s);
ArcSystem arc_system_from_json(const json& j, const std::string& pointer = "");

// Runs `body`, turning a DomainError thrown inside into an InputError at pointer.
template <class F>
auto at(const std::string& pointer, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const InputError&) {
    throw;
  } catch (const DomainError& e) {
    throw InputError(pointer, e.what());
  }
}

}  // namespace hardy::io
