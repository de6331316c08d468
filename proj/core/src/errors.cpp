#include "metricext/errors.hpp"

namespace metricext {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_vertex: return "DuplicateVertex";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::self_loop: return "SelfLoop";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::unknown_endpoint: return "UnknownEndpoint";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::disconnected: return "Disconnected";
    case Errc::no_path: return "NoPath";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::adjacent_pair: return "AdjacentPair";
    case Errc::not_metrizable: return "NotMetrizable";
    case Errc::not_pseudometrizable: return "NotPseudometrizable";
    case Errc::no_slack: return "NoSlack";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace metricext
