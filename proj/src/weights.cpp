// Copyright 2026 The shadowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "shadowlab/weights.hpp"

#include <algorithm>
#include <cmath>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

double l1(std::span<const double> v) {
    double total = 0.0;
    for (double w : v) {
        total += std::abs(w);
    }
    return total;
}

}  // namespace

std::vector<double> WeightFamily::evaluate(std::span<const double> x) const {
    require(x.size() == input_dim(), "input dimension " + std::to_string(x.size()) +
                                         " does not match weight family dimension " +
                                         std::to_string(input_dim()));
    std::vector<double> w = compute(x);
    ensure(w.size() == terms(), "weight family returned the wrong number of terms");
    ensure(l1(w) <= bound() + 1e-9, "weight family exceeds its declared bound B");
    return w;
}

ConstantWeights::ConstantWeights(std::vector<double> values, std::size_t input_dim)
    : values_(std::move(values)), input_dim_(input_dim), bound_(l1(values_)) {
    for (double v : values_) {
        require(std::isfinite(v), "weights must be finite");
    }
}

std::vector<double> ConstantWeights::compute(std::span<const double>) const { return values_; }

nlohmann::json ConstantWeights::to_json() const {
    return {{"type", "constant"}, {"values", values_}, {"input_dim", input_dim_}};
}

AffineWeights::AffineWeights(std::vector<double> offset, std::vector<std::vector<double>> slope,
                             std::vector<Interval> domain)
    : offset_(std::move(offset)), slope_(std::move(slope)), domain_(std::move(domain)), bound_(0.0) {
    require(slope_.size() == offset_.size(), "affine slope needs one row per term");
    for (const auto &row : slope_) {
        require(row.size() == domain_.size(), "affine slope row length must equal the input dimension");
    }
    require(domain_.size() <= 20, "affine weight families support at most 20 inputs");
    for (const auto &iv : domain_) {
        require(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo <= iv.hi, "invalid affine domain interval");
    }
    const std::size_t vertices = std::size_t{1} << domain_.size();
    std::vector<double> corner(domain_.size());
    for (std::size_t v = 0; v < vertices; ++v) {
        for (std::size_t i = 0; i < domain_.size(); ++i) {
            corner[i] = (v >> i) & 1 ? domain_[i].hi : domain_[i].lo;
        }
        bound_ = std::max(bound_, l1(compute(corner)));
    }
}

std::vector<double> AffineWeights::compute(std::span<const double> x) const {
    std::vector<double> w = offset_;
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            w[j] += slope_[j][i] * x[i];
        }
    }
    return w;
}

nlohmann::json AffineWeights::to_json() const {
    nlohmann::json domain = nlohmann::json::array();
    for (const auto &iv : domain_) {
        domain.push_back({iv.lo, iv.hi});
    }
    return {{"type", "affine"}, {"offset", offset_}, {"slope", slope_}, {"domain", domain}};
}

SumWeights::SumWeights(WeightFamilyPtr a, WeightFamilyPtr b) : a_(std::move(a)), b_(std::move(b)) {
    require(a_ && b_, "sum of weight families needs two operands");
    require(a_->terms() == b_->terms() && a_->input_dim() == b_->input_dim(),
            "summed weight families must have the same shape");
}

std::vector<double> SumWeights::compute(std::span<const double> x) const {
    std::vector<double> w = a_->evaluate(x);
    const std::vector<double> other = b_->evaluate(x);
    for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] += other[j];
    }
    return w;
}

nlohmann::json SumWeights::to_json() const { return {{"type", "sum"}, {"terms", {a_->to_json(), b_->to_json()}}}; }

WeightFamilyRegistry &WeightFamilyRegistry::instance() {
    static WeightFamilyRegistry registry;
    return registry;
}

WeightFamilyRegistry::WeightFamilyRegistry() {
    factories_["constant"] = [](const nlohmann::json &j) -> WeightFamilyPtr {
        return std::make_shared<ConstantWeights>(j.at("values").get<std::vector<double>>(),
                                                 j.value("input_dim", std::size_t{0}));
    };
    factories_["affine"] = [](const nlohmann::json &j) -> WeightFamilyPtr {
        std::vector<AffineWeights::Interval> domain;
        for (const auto &iv : j.at("domain")) {
            require(iv.is_array() && iv.size() == 2, "affine domain entries are [lo, hi] pairs");
            domain.push_back({iv[0].get<double>(), iv[1].get<double>()});
        }
        return std::make_shared<AffineWeights>(j.at("offset").get<std::vector<double>>(),
                                               j.at("slope").get<std::vector<std::vector<double>>>(),
                                               std::move(domain));
    };
    factories_["sum"] = [](const nlohmann::json &j) -> WeightFamilyPtr {
        const auto &terms = j.at("terms");
        require(terms.is_array() && terms.size() == 2, "sum weight family needs exactly two terms");
        const auto &registry = WeightFamilyRegistry::instance();
        return std::make_shared<SumWeights>(registry.create(terms[0]), registry.create(terms[1]));
    };
}

void WeightFamilyRegistry::add(const std::string &kind, Factory factory) { factories_[kind] = std::move(factory); }

bool WeightFamilyRegistry::contains(const std::string &kind) const { return factories_.count(kind) > 0; }

WeightFamilyPtr WeightFamilyRegistry::create(const nlohmann::json &spec) const {
    require(spec.is_object() && spec.contains("type"), "weight family needs a \"type\" field");
    const auto kind = spec.at("type").get<std::string>();
    auto it = factories_.find(kind);
    require(it != factories_.end(), "unknown weight family type '" + kind + "'");
    try {
        return it->second(spec);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError("malformed '" + kind + "' weight family: " + e.what());
    }
}

}  // namespace shadowlab
