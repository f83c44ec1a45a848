#ifndef AKH_VERIFY_HPP
#define AKH_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace akh {

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;  // counterexample data on failure
};

struct Report {
    std::string id;
    int m = 0, r = 0;
    std::string spec;  // the CLI spec string, empty when defaulted
    std::vector<CheckItem> items;
    double seconds = 0;

    bool ok() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    nlohmann::json to_json() const;
};

/// The closed list of verify job ids.
const std::vector<std::string>& verify_check_ids();

/// Run one verification suite. Throws std::invalid_argument for an unknown id
/// or malformed spec string (CLI exit 2); a failing assertion is a CheckItem
/// with ok = false (CLI exit 1), never an exception.
Report run_verify(const std::string& id, int m, int r, const std::string& spec_str);

} // namespace akh

#endif
