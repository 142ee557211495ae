#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "surfsing/discrepancy.hpp"
#include "surfsing/graph.hpp"

namespace surfsing {

/// General point of one exceptional curve.
struct FreePoint {
  std::string vertex;
};
/// Intersection point of two adjacent exceptional curves.
struct EdgePoint {
  std::string first;
  std::string second;
};
/// Point where D' meets `vertex`, or a smooth point of D' off the
/// exceptional locus when `vertex` is empty.
struct BoundaryPoint {
  std::optional<std::string> vertex;
};

using BlowUpCenter = std::variant<FreePoint, EdgePoint, BoundaryPoint>;

/// Center-spec grammar: free:C1 | edge:C1,C2 | boundary:C3 | boundary:-
BlowUpCenter parse_center(std::string_view spec);
std::string to_string(const BlowUpCenter& center);

/// Throws ValidationError naming the center when it is not valid on `graph`.
void check_center(const ResolutionGraph& graph, const BlowUpCenter& center);

struct BlowUpResult {
  ResolutionGraph graph;
  DiscrepancyProfile profile;
  std::string new_vertex;
};

/// Blows up `center`, appending a (-1)-curve and transporting the
/// coefficients without re-solving.
BlowUpResult blow_up(const ResolutionGraph& graph, const DiscrepancyProfile& profile,
                     const BlowUpCenter& center);

/// Transported coefficients == discrepancies(blown-up graph), exactly.
bool verify_transport(const ResolutionGraph& graph, const BlowUpCenter& center);

}  // namespace surfsing
