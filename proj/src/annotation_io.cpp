#include "tactile/annotation_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tactile {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

const std::set<std::string> kImageKeys{"image_id", "width_px", "height_px", "caption", "areas", "cam"};
const std::set<std::string> kAreaKeys{"label", "polygon", "recommended", "sub_areas", "prominence"};
const std::set<std::string> kCamKeys{"rows", "cols", "values"};

void note_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix,
                  std::vector<std::string>& out) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) {
            out.push_back(prefix.empty() ? key : prefix + "/" + key);
        }
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing \"" + key + "\"");
    }
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    return v.get<double>();
}

Area parse_area(const json& j, const std::string& where, std::vector<std::string>& unknown) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    note_unknown(j, kAreaKeys, where, unknown);
    Area area;
    const json& label = require(j, "label", where);
    if (!label.is_string()) {
        throw ParseError(where + "/label: expected a string");
    }
    area.label = label.get<std::string>();

    const json& poly = require(j, "polygon", where);
    if (!poly.is_array()) {
        throw ParseError(where + "/polygon: expected an array of [x,y] pairs");
    }
    for (const json& v : poly) {
        if (!v.is_array() || v.size() != 2) {
            throw ParseError(where + "/polygon: expected an array of [x,y] pairs");
        }
        area.polygon.push_back({number(v[0], where + "/polygon"), number(v[1], where + "/polygon")});
    }
    if (const auto it = j.find("recommended"); it != j.end()) {
        if (!it->is_boolean()) {
            throw ParseError(where + "/recommended: expected a boolean");
        }
        area.recommended = it->get<bool>();
    }
    if (const auto it = j.find("prominence"); it != j.end() && !it->is_null()) {
        area.prominence = number(*it, where + "/prominence");
    }
    if (const auto it = j.find("sub_areas"); it != j.end()) {
        if (!it->is_array()) {
            throw ParseError(where + "/sub_areas: expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            area.sub_areas.push_back(parse_area((*it)[i], where + "/sub_areas/" + std::to_string(i), unknown));
        }
    }
    return area;
}

ojson area_to_json(const Area& area) {
    ojson j = ojson::object();
    j["label"] = area.label;
    ojson poly = ojson::array();
    for (const Point& p : area.polygon) {
        poly.push_back(ojson::array({round9(p.x), round9(p.y)}));
    }
    j["polygon"] = std::move(poly);
    if (area.recommended) {
        j["recommended"] = true;
    }
    if (area.prominence) {
        j["prominence"] = round9(*area.prominence);
    }
    if (!area.sub_areas.empty()) {
        ojson subs = ojson::array();
        for (const Area& s : area.sub_areas) {
            subs.push_back(area_to_json(s));
        }
        j["sub_areas"] = std::move(subs);
    }
    return j;
}

}  // namespace

double round9(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    const double r = std::round(v * 1e9) / 1e9;
    return r == 0.0 ? 0.0 : r;
}

AnnotatedImage parse_annotation(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("annotation: expected a JSON object");
    }
    AnnotatedImage image;
    note_unknown(doc, kImageKeys, "", image.unknown_keys);

    const json& id = require(doc, "image_id", "annotation");
    if (!id.is_string()) {
        throw ParseError("image_id: expected a string");
    }
    image.image_id = id.get<std::string>();
    const json& w = require(doc, "width_px", "annotation");
    const json& h = require(doc, "height_px", "annotation");
    if (!w.is_number_integer() || !h.is_number_integer()) {
        throw ParseError("width_px/height_px: expected integers");
    }
    image.width_px = w.get<long long>();
    image.height_px = h.get<long long>();
    if (const auto it = doc.find("caption"); it != doc.end()) {
        if (!it->is_string()) {
            throw ParseError("caption: expected a string");
        }
        image.caption = it->get<std::string>();
    }
    const json& areas = require(doc, "areas", "annotation");
    if (!areas.is_array()) {
        throw ParseError("areas: expected an array");
    }
    for (std::size_t i = 0; i < areas.size(); ++i) {
        image.areas.push_back(parse_area(areas[i], "areas/" + std::to_string(i), image.unknown_keys));
    }
    if (const auto it = doc.find("cam"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) {
            throw ParseError("cam: expected an object");
        }
        note_unknown(*it, kCamKeys, "cam", image.unknown_keys);
        CamGrid cam;
        const json& rows = require(*it, "rows", "cam");
        const json& cols = require(*it, "cols", "cam");
        if (!rows.is_number_integer() || !cols.is_number_integer()) {
            throw ParseError("cam: rows/cols must be integers");
        }
        cam.rows = rows.get<int>();
        cam.cols = cols.get<int>();
        const json& values = require(*it, "values", "cam");
        if (!values.is_array()) {
            throw ParseError("cam/values: expected an array");
        }
        for (const json& v : values) {
            cam.values.push_back(number(v, "cam/values"));
        }
        image.cam = std::move(cam);
    }
    return image;
}

std::string dump_annotation(const AnnotatedImage& image) {
    ojson doc = ojson::object();
    doc["image_id"] = image.image_id;
    doc["width_px"] = image.width_px;
    doc["height_px"] = image.height_px;
    doc["caption"] = image.caption;
    ojson areas = ojson::array();
    for (const Area& a : image.areas) {
        areas.push_back(area_to_json(a));
    }
    doc["areas"] = std::move(areas);
    if (image.cam) {
        ojson values = ojson::array();
        for (double v : image.cam->values) {
            values.push_back(round9(v));
        }
        doc["cam"] = {{"rows", image.cam->rows}, {"cols", image.cam->cols}, {"values", std::move(values)}};
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

AnnotatedImage load_annotation(const std::filesystem::path& path) { return parse_annotation(read_text_file(path)); }

void save_annotation(const std::filesystem::path& path, const AnnotatedImage& image) {
    write_text_file(path, dump_annotation(image));
}

}  // namespace tactile
