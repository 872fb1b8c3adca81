#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropjac/errors.hpp"
#include "tropjac/metric_graph.hpp"

namespace tropjac {

/// Some value difference across an edge is not an integer multiple of its length.
class NotPLError : public PreconditionError {
 public:
  NotPLError(std::string edge, const std::string& message) : PreconditionError(message), edge_(std::move(edge)) {}
  const std::string& edge() const { return edge_; }

 private:
  std::string edge_;
};

/// M^gp-valued vertex function with integer slopes:
/// value(head(e)) - value(tail(e)) == slope(e) * length(e) for every edge.
struct PLFunction {
  std::vector<LatticeVector> values;  // indexed by vertex
  std::vector<Integer> slopes;        // indexed by edge, along the stored orientation

  friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
};

PLFunction make_pl(const MetricGraph& g, const std::vector<LatticeVector>& values);
PLFunction make_pl(const MetricGraph& g, const std::map<std::string, LatticeVector>& values);

/// Checks the compatibility relation between values and slopes.
bool is_valid_pl(const MetricGraph& g, const PLFunction& f);

/// Sum of slopes leaving each vertex. The indicator of a vertex of valence d
/// (no loops) has multidegree -d there.
LatticeVector multidegree(const MetricGraph& g, const PLFunction& f);

/// Lattice basis of the PL functions with zero multidegree, from the integer kernel
/// of the joint compatibility and multidegree system.
std::vector<PLFunction> harmonic_space(const MetricGraph& g);

}  // namespace tropjac
