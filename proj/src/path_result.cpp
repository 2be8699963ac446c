#include "wormhole/path_result.hpp"

namespace wormhole {

std::string_view to_string(RouteCase c) {
    switch (c) {
        case RouteCase::same_node: return "same_node";
        case RouteCase::direct_edge: return "direct_edge";
        case RouteCase::intersect_outside: return "intersect_outside";
        case RouteCase::through_core: return "through_core";
        case RouteCase::exhausted_component: return "exhausted_component";
        case RouteCase::exact: return "exact";
    }
    return "unknown";
}

}  // namespace wormhole
