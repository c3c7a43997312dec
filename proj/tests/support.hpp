#pragma once

#include <initializer_list>
#include <string>

#include "frankl/frankl.hpp"

namespace support {

inline frankl::VertexSet ids(std::initializer_list<const char*> names) {
    frankl::VertexSet out;
    for (auto n : names) out.insert(frankl::parse_vertex_id(n));
    return out;
}

inline frankl::VertexId id(const char* name) { return frankl::parse_vertex_id(name); }

inline std::vector<frankl::VertexId> id_list(std::initializer_list<const char*> names) {
    std::vector<frankl::VertexId> out;
    for (auto n : names) out.push_back(frankl::parse_vertex_id(n));
    return out;
}

}  // namespace support
