#pragma once

#include <string_view>

namespace amphi::embedded {

std::string_view polyhedra_json();
std::string_view defaults_json();

}  // namespace amphi::embedded
