#include "qnk/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qnk {

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
double number_from(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json summary_json(const Summary& s) {
    return {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"ambiguous", s.ambiguous},
            {"refused", s.refused}};
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

// Splits one CSV record; quoted fields may not span lines (we never emit newlines).
std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> f(1);
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') f.back() += '"', ++i;
            else if (c == '"') quoted = false;
            else f.back() += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            f.emplace_back();
        } else {
            f.back() += c;
        }
    }
    if (quoted) throw Error(ErrorCode::InvalidArgument, "unterminated quote in CSV record");
    return f;
}

const char* kCsvHeader = "name,params,expected,observed,residual,status,wall_time";

} // namespace

json to_json(const CheckResult& c, bool include_timings) {
    return {{"name", c.name},
            {"params", c.params},
            {"expected", c.expected},
            {"observed", c.observed},
            {"residual", number(c.residual)},
            {"status", to_string(c.status)},
            {"wall_time", include_timings ? number(c.wall_time) : json(nullptr)}};
}

CheckResult check_from_json(const json& j) {
    CheckResult c;
    c.name = j.at("name").get<std::string>();
    c.params = j.at("params");
    c.expected = j.at("expected");
    c.observed = j.at("observed");
    c.residual = number_from(j.at("residual"));
    c.status = status_from_string(j.at("status").get<std::string>());
    c.wall_time = j.at("wall_time").is_null() ? 0.0 : j.at("wall_time").get<double>();
    return c;
}

std::string emit(const Report& r, Format f, bool include_timings) {
    if (f == Format::Json) {
        json j;
        j["version"] = r.version;
        j["config"] = r.config;
        j["results"] = json::array();
        for (const auto& c : r.results) j["results"].push_back(to_json(c, include_timings));
        j["summary"] = summary_json(r.summary());
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "# " << json({{"version", r.version}, {"config", r.config}}).dump() << "\n" << kCsvHeader << "\n";
    for (const auto& c : r.results) {
        os << csv_quote(c.name) << ',' << csv_quote(c.params.dump()) << ',' << csv_quote(c.expected.dump()) << ','
           << csv_quote(c.observed.dump()) << ',' << number(c.residual).dump() << ',' << to_string(c.status) << ','
           << (include_timings ? number(c.wall_time).dump() : std::string("null")) << "\n";
    }
    return os.str();
}

Report parse_report(const std::string& text, Format f) {
    Report r;
    if (f == Format::Json) {
        const json j = json::parse(text);
        r.version = j.at("version").get<std::string>();
        r.config = j.at("config");
        for (const auto& c : j.at("results")) r.results.push_back(check_from_json(c));
        return r;
    }
    std::istringstream is(text);
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const json meta = json::parse(line.substr(2));
            r.version = meta.at("version").get<std::string>();
            r.config = meta.at("config");
            continue;
        }
        if (!header) {
            if (line != kCsvHeader) throw Error(ErrorCode::InvalidArgument, "unexpected CSV header");
            header = true;
            continue;
        }
        const auto f7 = csv_split(line);
        if (f7.size() != 7) throw Error(ErrorCode::InvalidArgument, "CSV record needs 7 fields");
        CheckResult c;
        c.name = f7[0];
        c.params = json::parse(f7[1]);
        c.expected = json::parse(f7[2]);
        c.observed = json::parse(f7[3]);
        c.residual = number_from(json::parse(f7[4]));
        c.status = status_from_string(f7[5]);
        const json wt = json::parse(f7[6]);
        c.wall_time = wt.is_null() ? 0.0 : wt.get<double>();
        r.results.push_back(std::move(c));
    }
    return r;
}

} // namespace qnk
