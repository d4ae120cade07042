#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "gdd/oracle.hpp"
#include "gdd/provider.hpp"

namespace gdd {

struct TraceNode {
  std::string label;
  std::vector<TraceNode> children;
};
std::string trace_to_string(const TraceNode& t, int indent = 0);

// The existence theorem's proof tree: routes every admissible triple to a
// construction branch, recursing through the Provider interface.
class Dispatcher : public Provider {
 public:
  explicit Dispatcher(Oracle& o) : oracle_(o) {}

  struct Result {
    DesignPair pair;
    TraceNode trace;
    long long blocks = 0;
  };

  // Memoized; output verified before being served. Throws NotAdmissible for
  // triples outside the spectrum.
  Result construct(int g, int t, int u);

  // Routing tree without materializing designs.
  TraceNode explain(int g, int t, int u);

  struct ScanRow {
    int g = 0, t = 0, u = 0;
    std::string route;
    long long blocks = 0;
    bool ok = false;
    std::string error;
    long long millis = 0;
  };
  // Constructs and verifies every admissible triple with gt+u <= max_n.
  std::vector<ScanRow> scan(int max_n, int jobs = 1);

  // Provider interface.
  DesignPair pair(int g, int t, int u) override;
  Oracle& oracle() override { return oracle_; }

  // Test hook: prefer the named branch when it applies ("goddt04",
  // "special", "most", "dif").
  void set_route_override(const std::string& name) { override_ = name; }

 private:
  Oracle& oracle_;
  std::string override_;
  std::mutex memo_mu_;
  std::map<std::array<int, 3>, Result> memo_;

  Result construct_uncached(int g, int t, int u);
  DesignPair route(int g, int t, int u, TraceNode& trace);
};

}  // namespace gdd
