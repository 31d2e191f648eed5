#include "paralift/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace paralift::data {

namespace detail {
const char* f223_json();
const char* c_kcurve_json();
const char* cprime_qcurve_json();
const char* sextic_json();
const char* table1_json();
} // namespace detail

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UnknownAsset("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* asset_filename(const std::string& name) {
    if (name == "f223")
        return "f223.json";
    if (name == "C")
        return "C.kcurve";
    if (name == "Cprime")
        return "Cprime.qcurve";
    if (name == "sextic")
        return "sextic.json";
    if (name == "table1")
        return "table1.json";
    return nullptr;
}

} // namespace

std::string asset_text(const std::string& name, const std::string& data_dir) {
    const char* file = asset_filename(name);
    if (!file)
        throw UnknownAsset("no bundled asset named \"" + name + "\"");
    std::string dir = data_dir;
    if (dir.empty())
        if (const char* env = std::getenv("PARALIFT_DATA_DIR"))
            dir = env;
    if (!dir.empty())
        return read_file(dir + "/" + file);
    if (name == "f223")
        return detail::f223_json();
    if (name == "C")
        return detail::c_kcurve_json();
    if (name == "Cprime")
        return detail::cprime_qcurve_json();
    if (name == "sextic")
        return detail::sextic_json();
    return detail::table1_json();
}

std::string load_text(const std::string& ref, const std::string& data_dir) {
    const std::string prefix = "builtin:";
    if (ref.rfind(prefix, 0) == 0)
        return asset_text(ref.substr(prefix.size()), data_dir);
    if (ref == "builtin")
        throw UnknownAsset("bare \"builtin\" needs a context-specific default");
    return read_file(ref);
}

bianchi::BianchiNewform bundled_newform(const std::string& data_dir) {
    return bianchi::load_newform(asset_text("f223", data_dir));
}

curves::CurveK bundled_curve_K(const std::string& data_dir) {
    return curves::load_curve_K(asset_text("C", data_dir));
}

curves::CurveQ bundled_curve_Q(const std::string& data_dir) {
    return curves::load_curve_Q(asset_text("Cprime", data_dir));
}

fs::SexticField bundled_sextic(const std::string& data_dir) {
    return fs::load_sextic(asset_text("sextic", data_dir));
}

} // namespace paralift::data
