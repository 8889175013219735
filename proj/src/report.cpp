#include "symrep/report.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace symrep {

namespace {

std::string csv_field(const ReportCell& c)
{
    struct Visitor {
        std::string operator()(const std::string& s) const
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string q = "\"";
            for (char ch : s) {
                if (ch == '"')
                    q += '"';
                q += ch;
            }
            return q + "\"";
        }
        std::string operator()(double x) const
        {
            std::ostringstream os;
            os << std::setprecision(17) << x;
            return os.str();
        }
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::json json_value(const ReportCell& c)
{
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
                if (!std::isfinite(v))
                    return nullptr;
            }
            return v;
        },
        c);
}

} // namespace

void write_csv(const Report& r, std::ostream& os)
{
    os << "# seed=" << r.seed << '\n';
    os << "# experiment=" << r.name << '\n';
    for (const auto& [k, v] : r.config)
        os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        os << (i ? "," : "") << r.columns[i];
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
    }
}

void write_json(const Report& r, std::ostream& os)
{
    nlohmann::json j;
    nlohmann::json config = nlohmann::json::object();
    config["experiment"] = r.name;
    for (const auto& [k, v] : r.config)
        config[k] = v;
    j["config"] = config;
    j["seed"] = r.seed;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i)
            obj[r.columns[i]] = json_value(row[i]);
        results.push_back(obj);
    }
    j["results"] = results;
    os << j.dump(2) << '\n';
}

} // namespace symrep
