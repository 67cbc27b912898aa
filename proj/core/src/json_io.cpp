#include "tromino/json_io.hpp"

namespace tromino {

using nlohmann::json;

json board_to_json(const DeficientBoard& b) {
    json missing = json::array();
    for (const Cell& c : b.missing()) missing.push_back({c.row, c.col});
    return json{{"rows", b.rect().rows}, {"cols", b.rect().cols}, {"missing", missing}};
}

DeficientBoard board_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
        throw Error(Errc::BadInput, "board JSON requires rows and cols");
    std::vector<Cell> missing;
    if (j.contains("missing")) {
        for (const auto& m : j.at("missing")) {
            if (!m.is_array() || m.size() != 2)
                throw Error(Errc::BadInput, "missing entries must be [row, col] pairs");
            missing.push_back({m[0].get<int>(), m[1].get<int>()});
        }
    }
    return DeficientBoard(j.at("rows").get<int>(), j.at("cols").get<int>(), std::move(missing));
}

json tiling_to_json(const Tiling& t) {
    json placements = json::array();
    for (const Placement& p : t.placements) {
        json jp{{"kind", to_string(p.kind)}, {"anchor", {p.anchor.row, p.anchor.col}}};
        if (p.direction) jp["direction"] = to_string(*p.direction);
        placements.push_back(std::move(jp));
    }
    return json{{"board", board_to_json(t.board)}, {"placements", placements}};
}

Tiling tiling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("board") || !j.contains("placements"))
        throw Error(Errc::BadInput, "tiling JSON requires board and placements");
    Tiling t;
    t.board = board_from_json(j.at("board"));
    for (const auto& jp : j.at("placements")) {
        Placement p;
        p.kind = placement_kind_from_string(jp.at("kind").get<std::string>());
        const auto& a = jp.at("anchor");
        p.anchor = {a[0].get<int>(), a[1].get<int>()};
        if (jp.contains("direction"))
            p.direction = direction_from_string(jp.at("direction").get<std::string>());
        t.placements.push_back(p);
    }
    return t;
}

}  // namespace tromino
