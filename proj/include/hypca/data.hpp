#pragma once

#include <string_view>

/// Rule tables and the stand-in 1D automaton, compiled in from data/.
namespace hypca::data {

std::string_view table1();
std::string_view table2();
std::string_view table3();
std::string_view table4();
std::string_view c9_erase();
std::string_view reconstructed();
std::string_view walker();

/// Looks up one of the above by file name (`table1.rules`, `walker.oned`...);
/// empty when unknown.
std::string_view by_name(std::string_view file);

}  // namespace hypca::data
