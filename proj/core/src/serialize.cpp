#include "polyvdw/serialize.hpp"

#include <json.hpp>

namespace polyvdw {

namespace {

using Json = nlohmann::ordered_json;

Json instance_node(const PatternInstance& inst) {
    Json node = Json::object();
    node["x"] = inst.x;
    node["y"] = inst.y;
    node["values"] = inst.values;
    node["degenerate"] = inst.degenerate;
    return node;
}

Json scan_node(const ScanReport& report) {
    Json node = Json::object();
    node["total"] = report.total;
    node["mono"] = report.mono;
    node["monoNonDegenerate"] = report.monoNonDegenerate;
    node["rainbow"] = report.rainbow;
    node["nonRainbow"] = report.nonRainbow;
    node["degenerate"] = report.degenerate;
    node["monoWitness"] = report.monoWitness ? instance_node(*report.monoWitness) : Json();
    node["rainbowWitness"] = report.rainbowWitness ? instance_node(*report.rainbowWitness) : Json();
    return node;
}

Json density_node(const WindowDensity& density) {
    Json node = Json::object();
    node["minLength"] = density.minLength;
    node["worst"] = density.worst;
    node["worstCount"] = density.worstCount;
    node["worstLength"] = density.worstLength;
    Json argmax = Json::object();
    argmax["class"] = density.argmaxClass;
    argmax["start"] = density.argmaxStart;
    argmax["length"] = density.argmaxLength;
    node["argmax"] = std::move(argmax);
    return node;
}

Json pipeline_node(const PipelineReport& report) {
    Json node = Json::object();
    node["density"] = density_node(report.density);
    node["scan"] = scan_node(report.scan);
    node["unionBound"] = report.unionBound;
    Json verdict = Json::object();
    verdict["rainbowExists"] = report.verdict.rainbowExists;
    verdict["nonRainbowLessThanTotal"] = report.verdict.nonRainbowLessThanTotal;
    verdict["monoWitnessPresent"] = report.verdict.monoWitnessPresent;
    node["verdict"] = std::move(verdict);
    return node;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string to_json(const PatternInstance& inst) { return instance_node(inst).dump(); }

std::string to_json(const ScanReport& report) { return dump(scan_node(report)); }

std::string to_json(const WindowDensity& density) { return dump(density_node(density)); }

std::string analyze_json(const ScanReport& scan, const WindowDensity& density) {
    Json node = Json::object();
    node["scan"] = scan_node(scan);
    node["density"] = density_node(density);
    return dump(node);
}

std::string pair_count_json(uint64_t pairs) {
    Json node = Json::object();
    node["pairCount"] = std::to_string(pairs);
    return dump(node);
}

std::string pair_count_windowed_json(uint64_t pairs, const WindowedPairCount& windowed) {
    Json node = Json::object();
    node["pairCount"] = std::to_string(pairs);
    node["windowSum"] = std::to_string(windowed.windowSum);
    node["windowScale"] = windowed.windowScale;
    return dump(node);
}

std::string moment_json(const IntPolynomial& f, int64_t n, int s, uint128 moment,
                        std::string_view method) {
    Json node = Json::object();
    node["f"] = f.to_string();
    node["n"] = n;
    node["s"] = s;
    node["moment"] = to_decimal(moment);
    node["method"] = std::string(method);
    return dump(node);
}

std::string to_json(const HolderChainReport& report) {
    Json node = Json::object();
    node["lhs"] = report.lhs;
    node["holderBound"] = report.holderBound;
    node["supBound"] = report.supBound;
    node["parsevalForm"] = report.parsevalForm;
    node["setTransformIntegral"] = report.setTransformIntegral;
    node["momentIntegral"] = report.momentIntegral;
    node["gridSize"] = report.gridSize;
    node["verdict"] = report.verdict;
    return dump(node);
}

std::string search_result_json(const SearchResult& result, SearchMode mode) {
    Json node = Json::object();
    node["mode"] = std::string(to_string(mode));
    node["cap"] = result.cap;
    if (result.threshold) {
        node["threshold"] = *result.threshold;
        node["status"] = "threshold";
    } else {
        node["threshold"] = Json();
        node["status"] = "not found <= cap";
    }
    if (result.witness) {
        node["witnessLength"] = result.witness->size();
        node["witness"] = result.witness->colors();
    } else {
        node["witnessLength"] = 0;
        node["witness"] = Json::array();
    }
    Json stats = Json::object();
    stats["nodes"] = result.stats.nodes;
    stats["prunes"] = result.stats.prunes;
    node["stats"] = std::move(stats);
    return dump(node);
}

std::string to_json(const PipelineReport& report) { return dump(pipeline_node(report)); }

}  // namespace polyvdw
