#include "metricext/distance_matrix.hpp"

namespace metricext {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::shortest_path: return "shortest_path";
    case Provenance::user_supplied: return "user_supplied";
    case Provenance::witness: return "witness";
  }
  return "unknown";
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, Provenance provenance)
    : labels_(std::move(labels)),
      entries_(labels_.size() * labels_.size(), Rational(0)),
      provenance_(provenance) {}

void DistanceMatrix::set(int i, int j, const Rational& value) {
  entries_[i * size() + j] = value;
  entries_[j * size() + i] = value;
}

}  // namespace metricext
