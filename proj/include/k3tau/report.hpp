#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "k3tau/conditions.hpp"
#include "k3tau/hilbert.hpp"
#include "k3tau/serialize.hpp"
#include "k3tau/tau.hpp"

namespace k3tau {

struct ReportRecord {
  std::int64_t d = 0;
  DClassification classification;
  std::optional<MukaiVector> mukai_v;  // present iff tau_extended
  std::optional<MukaiVector> L_tau;
  std::map<std::int64_t, HilbVerdict> hilb;
  std::vector<std::string> certificates;
};

struct RecordOptions {
  std::vector<std::int64_t> ns;
  /// Build the glued involution and read v off it, rather than using the closed formula.
  bool construct = false;
  /// Directory for certificate files; implies construct.
  std::optional<std::string> certify_dir;
};

/// Throws InadmissibleDegree for odd or non-positive d, std::invalid_argument for n < 2.
ReportRecord make_record(std::int64_t d, const RecordOptions& options);

Json record_json(const ReportRecord& r);
ReportRecord record_from_json(const Json& j);

enum class Format { Table, Json, Csv };
Format parse_format(const std::string& name);

std::string render_check(const ReportRecord& r, Format format);
std::string render_scan(const std::vector<ReportRecord>& rows, const std::vector<std::int64_t>& ns, Format format);

/// Filters accepted by scan: all, star, twostar, threestar, tau_strict, tau_extended.
bool passes_filter(const DClassification& c, const std::string& filter);
void require_filter(const std::string& filter);

/// Worker count from K3TAU_WORKERS, else the hardware concurrency.
unsigned worker_count();

/// Records for the even d in [d_from, d_to] passing the filter, ordered by d.
std::vector<ReportRecord> scan(std::int64_t d_from, std::int64_t d_to, const std::string& filter,
                               const RecordOptions& options, unsigned workers = worker_count());

/// f applied to every input on `workers` threads; results keep the input order.
/// The first exception thrown by any call is rethrown.
template <class In, class F>
auto parallel_map(const std::vector<In>& inputs, F f, unsigned workers = worker_count()) {
  using Out = decltype(f(inputs.front()));
  std::vector<std::optional<Out>> slots(inputs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::size_t i; !failed && (i = next++) < inputs.size();) {
      try {
        slots[i].emplace(f(inputs[i]));
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<Out> out;
  out.reserve(inputs.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace k3tau
