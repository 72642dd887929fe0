#include "cylsum/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cylsum {

namespace {

std::string join_semicolon(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ";";
        s += format_double(v[i]);
    }
    return s;
}

}  // namespace

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "command,d,m,mu,alpha,beta,n,delta,quantity,value,refinement,seconds,flag\n";
    const std::string alpha = join_semicolon(config.alpha);
    const std::string beta = join_semicolon(config.beta);
    for (const auto& r : rows) {
        out << r.command << ',' << config.d << ',' << config.m << ','
            << format_double(config.mu) << ',' << alpha << ',' << beta << ','
            << r.n << ',' << format_double(r.delta) << ',' << r.quantity << ','
            << format_double(r.value) << ',' << format_double(r.refinement) << ','
            << format_double(r.seconds) << ',' << r.flag << '\n';
    }
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["config"] = emit_config(config);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["command"] = r.command;
        row["d"] = config.d;
        row["m"] = config.m;
        row["mu"] = config.mu;
        row["alpha"] = config.alpha;
        row["beta"] = config.beta;
        row["n"] = r.n;
        row["delta"] = r.delta;
        row["quantity"] = r.quantity;
        row["value"] = r.value;
        row["refinement"] = r.refinement;
        row["seconds"] = r.seconds;
        row["flag"] = r.flag;
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json();
    return to_csv();
}

}  // namespace cylsum
