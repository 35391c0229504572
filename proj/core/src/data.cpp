#include "coxinv/data.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace coxinv {

namespace detail {
const std::map<std::string, std::string>& embedded_golden_table();
}

namespace {
std::string g_override_dir;
std::mutex g_mutex;
}  // namespace

const std::string& golden_text(const std::string& name) {
    const auto& table = detail::embedded_golden_table();
    auto it = table.find(name);
    if (it == table.end())
        throw std::out_of_range("unknown reference data entry: " + name);
    return it->second;
}

std::vector<std::string> golden_names() {
    std::vector<std::string> v;
    for (const auto& [k, t] : detail::embedded_golden_table()) v.push_back(k);
    return v;
}

void set_golden_override_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_override_dir = dir;
}

GoldenFile golden_file(const std::string& name) {
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        if (!g_override_dir.empty()) {
            std::ifstream in(g_override_dir + "/" + name + ".txt");
            if (in) {
                std::ostringstream ss;
                ss << in.rdbuf();
                return parse_golden_file(ss.str());
            }
        }
    }
    return parse_golden_file(golden_text(name));
}

Poly golden_poly(const std::string& name, const RingPtr& ring) {
    GoldenFile f = golden_file(name);
    if (f.entries.size() != 1 || f.entries[0].kind != "poly")
        throw std::invalid_argument(name + " is not a single-polynomial entry");
    f.entries[0].poly.names = f.names;
    return raw_to_poly(ring, f.entries[0].poly);
}

}  // namespace coxinv
