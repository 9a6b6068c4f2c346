#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include "subword/errors.hpp"

namespace subword::cli {

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Text: return "text";
    }
    return "json";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw ParseError("unknown output format '" + s + "' (json, csv or text)");
}

unsigned RunConfig::default_parallelism() {
    const unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

void RunConfig::validate() const {
    if (max_word_length < 2 || max_word_length > 63) throw ParseError("max_word_length must lie in [2, 63]");
    if (dense_limit == 0) throw ParseError("dense_limit must be positive");
    if (det_limit == 0) throw ParseError("det_limit must be positive");
    if (direct_sum_limit == 0) throw ParseError("direct_sum_limit must be positive");
    if (!(gelfand_tol > 0)) throw ParseError("gelfand_tol must be positive");
    if (sweep_parallelism == 0) throw ParseError("sweep_parallelism must be positive");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T number(const std::string& key, const std::string& v) {
    T out{};
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size()) throw ParseError("bad value for " + key + ": '" + v + "'");
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "max_word_length") c.max_word_length = number<unsigned>(key, val);
        else if (key == "dense_limit") c.dense_limit = number<std::size_t>(key, val);
        else if (key == "det_limit") c.det_limit = number<std::size_t>(key, val);
        else if (key == "direct_sum_limit") c.direct_sum_limit = number<std::uint64_t>(key, val);
        else if (key == "gelfand_tol") c.gelfand_tol = number<double>(key, val);
        else if (key == "sweep_parallelism") c.sweep_parallelism = number<unsigned>(key, val);
        else if (key == "output_format") c.output_format = parse_format(val);
        else throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot read config file " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return parse_config(s.str());
}

std::string save_config(const RunConfig& c) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, c.gelfand_tol);  // shortest round-trip form
    std::ostringstream os;
    os << "max_word_length = " << c.max_word_length << '\n'
       << "dense_limit = " << c.dense_limit << '\n'
       << "det_limit = " << c.det_limit << '\n'
       << "direct_sum_limit = " << c.direct_sum_limit << '\n'
       << "gelfand_tol = " << std::string(buf, r.ptr) << '\n'
       << "sweep_parallelism = " << c.sweep_parallelism << '\n'
       << "output_format = " << to_string(c.output_format) << '\n';
    return os.str();
}

}  // namespace subword::cli
