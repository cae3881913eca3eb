#pragma once

#include <string>

#include <json.hpp>

#include "ucyc/class_graph.hpp"
#include "ucyc/transition_graph.hpp"

namespace ucyc {

// DOT: directed for T (edge label = rep and class), undirected for H.
// Component indices are attached as node/edge attributes.
std::string to_dot(const TransitionGraph& t);
std::string to_dot(const ClassGraph& h);

// JSON adjacency: {vertices:[[tuple],...], edges:[{from,to,rep,dropped,class,component}]}.
nlohmann::json to_json(const TransitionGraph& t);
nlohmann::json to_json(const ClassGraph& h);

} // namespace ucyc
