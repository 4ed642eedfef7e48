#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypca::cli {

enum Exit : int { kOk = 0, kSemantic = 1, kInput = 2, kMissingRule = 3 };

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypca::cli
