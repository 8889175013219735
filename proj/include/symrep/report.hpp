#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symrep {

using ReportCell = std::variant<std::string, double, long long, bool>;

struct Report {
    std::string name;
    std::vector<std::pair<std::string, std::string>> config;
    std::uint64_t seed = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<ReportCell>> rows;
};

// "# seed=..." then "# key=value" lines, a header row and the data rows.
void write_csv(const Report& r, std::ostream& os);
// {"config": {...}, "results": [{column: value}...], "seed": ...}
void write_json(const Report& r, std::ostream& os);

} // namespace symrep
