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


#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include "json.hpp"
#include <span>
#include <string>
#include <vector>

namespace shadowlab {

/// Data-dependent weights w(x) of a Pauli-weighted flipped model together with
/// the declared bound B >= max_x sum_j |w_j(x)|.
class WeightFamily {
   public:
    virtual ~WeightFamily() = default;

    virtual std::size_t terms() const = 0;
    virtual std::size_t input_dim() const = 0;
    virtual double bound() const = 0;
    virtual std::string kind() const = 0;
    virtual nlohmann::json to_json() const = 0;

    /// Evaluates w(x) and checks sum_j |w_j(x)| <= bound() within 1e-9.
    std::vector<double> evaluate(std::span<const double> x) const;

   protected:
    virtual std::vector<double> compute(std::span<const double> x) const = 0;
};

using WeightFamilyPtr = std::shared_ptr<const WeightFamily>;

/// w(x) = values, independent of x.
class ConstantWeights final : public WeightFamily {
   public:
    ConstantWeights(std::vector<double> values, std::size_t input_dim = 0);

    std::size_t terms() const override { return values_.size(); }
    std::size_t input_dim() const override { return input_dim_; }
    double bound() const override { return bound_; }
    std::string kind() const override { return "constant"; }
    nlohmann::json to_json() const override;

   protected:
    std::vector<double> compute(std::span<const double> x) const override;

   private:
    std::vector<double> values_;
    std::size_t input_dim_;
    double bound_;
};

/// w(x) = offset + slope * x on the box domain [lo_i, hi_i]. The bound is the
/// maximum of sum_j |w_j| over the box vertices, which is exact because the
/// l1 norm of an affine map is convex.
class AffineWeights final : public WeightFamily {
   public:
    struct Interval {
        double lo;
        double hi;
    };

    AffineWeights(std::vector<double> offset, std::vector<std::vector<double>> slope, std::vector<Interval> domain);

    std::size_t terms() const override { return offset_.size(); }
    std::size_t input_dim() const override { return domain_.size(); }
    double bound() const override { return bound_; }
    std::string kind() const override { return "affine"; }
    nlohmann::json to_json() const override;

    const std::vector<Interval> &domain() const { return domain_; }

   protected:
    std::vector<double> compute(std::span<const double> x) const override;

   private:
    std::vector<double> offset_;
    std::vector<std::vector<double>> slope_;  // terms x input_dim
    std::vector<Interval> domain_;
    double bound_;
};

/// Termwise sum of two families with the same shape; bound is the sum of bounds.
class SumWeights final : public WeightFamily {
   public:
    SumWeights(WeightFamilyPtr a, WeightFamilyPtr b);

    std::size_t terms() const override { return a_->terms(); }
    std::size_t input_dim() const override { return a_->input_dim(); }
    double bound() const override { return a_->bound() + b_->bound(); }
    std::string kind() const override { return "sum"; }
    nlohmann::json to_json() const override;

   protected:
    std::vector<double> compute(std::span<const double> x) const override;

   private:
    WeightFamilyPtr a_;
    WeightFamilyPtr b_;
};

/// Name -> factory registry used by the JSON model loader. Built-in kinds are
/// "constant", "affine" and "sum"; task modules register their own families.
class WeightFamilyRegistry {
   public:
    using Factory = std::function<WeightFamilyPtr(const nlohmann::json &)>;

    static WeightFamilyRegistry &instance();

    void add(const std::string &kind, Factory factory);
    bool contains(const std::string &kind) const;
    WeightFamilyPtr create(const nlohmann::json &spec) const;

   private:
    WeightFamilyRegistry();
    std::map<std::string, Factory> factories_;
};

}  // namespace shadowlab
