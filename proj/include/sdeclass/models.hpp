#pragma once

// Generative mixture diffusion models: K class-specific drift functions, one
// shared diffusion coefficient, and mixture weights. Instances are built
// through the model-id registry ("cosine:<theta>", "ou:<sigma>") so datasets
// can record provenance in file headers, or assembled directly from closures
// for synthetic test setups.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdeclass {

class DiffusionModel {
 public:
  using Fn = std::function<double(double)>;

  DiffusionModel(std::string id, std::vector<Fn> drifts, Fn diffusion,
                 std::vector<double> weights, double sigma_floor)
      : id_(std::move(id)),
        drifts_(std::move(drifts)),
        diffusion_(std::move(diffusion)),
        sigma_floor_(sigma_floor) {
    if (drifts_.size() < 2) throw std::invalid_argument("DiffusionModel: need at least 2 classes");
    if (!diffusion_) throw std::invalid_argument("DiffusionModel: missing diffusion function");
    if (!(sigma_floor_ > 0.0)) throw std::invalid_argument("DiffusionModel: sigma floor must be positive");
    set_weights(std::move(weights));
  }

  int k_classes() const { return static_cast<int>(drifts_.size()); }
  const std::string& id() const { return id_; }
  const std::vector<double>& weights() const { return weights_; }
  double sigma_floor() const { return sigma_floor_; }

  // Mixture weights are configurable; they must form a probability vector.
  void set_weights(std::vector<double> w) {
    if (static_cast<int>(w.size()) != k_classes())
      throw std::invalid_argument("DiffusionModel: weight count mismatch");
    double sum = 0.0;
    for (double p : w) {
      if (!(p >= 0.0)) throw std::invalid_argument("DiffusionModel: negative weight");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("DiffusionModel: weights must sum to 1");
    weights_ = std::move(w);
  }

  double drift(int cls, double x) const {
    if (cls < 1 || cls > k_classes())
      throw std::invalid_argument("DiffusionModel: class " + std::to_string(cls) + " out of range 1.." +
                                  std::to_string(k_classes()));
    return drifts_[static_cast<std::size_t>(cls - 1)](x);
  }

  double sigma(double x) const { return diffusion_(x); }

 private:
  std::string id_;
  std::vector<Fn> drifts_;
  Fn diffusion_;
  std::vector<double> weights_;
  double sigma_floor_;
};

inline double eval_drift(const DiffusionModel& m, int cls, double x) { return m.drift(cls, x); }
inline double eval_sigma(const DiffusionModel& m, double x) { return m.sigma(x); }

namespace detail {
inline std::string format_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace detail

// Three-class cosine mixture: b1 = 1/4 + (3/4)cos^2 x, b2 = theta*b1,
// b3 = -theta*b1, sigma(x) = 0.1 + 0.9/sqrt(1+x^2), uniform weights.
inline DiffusionModel make_cosine_model(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::invalid_argument("make_cosine_model: theta must be positive");
  auto base = [](double x) {
    const double c = std::cos(x);
    return 0.25 + 0.75 * c * c;
  };
  std::vector<DiffusionModel::Fn> drifts = {
      [base](double x) { return base(x); },
      [base, theta](double x) { return theta * base(x); },
      [base, theta](double x) { return -theta * base(x); },
  };
  auto sig = [](double x) { return 0.1 + 0.9 / std::sqrt(1.0 + x * x); };
  return DiffusionModel("cosine:" + detail::format_param(theta), std::move(drifts), sig,
                        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 0.1);
}

// Three-class Ornstein-Uhlenbeck mixture: b1 = 1-x, b2 = -1-x, b3 = -x,
// constant diffusion sigma, uniform weights.
inline DiffusionModel make_ou_model(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("make_ou_model: sigma must be positive");
  std::vector<DiffusionModel::Fn> drifts = {
      [](double x) { return 1.0 - x; },
      [](double x) { return -1.0 - x; },
      [](double x) { return -x; },
  };
  return DiffusionModel("ou:" + detail::format_param(sigma), std::move(drifts),
                        [sigma](double) { return sigma; },
                        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, sigma);
}

// Model-id grammar: "cosine:<theta>" or "ou:<sigma>" with a decimal parameter.
inline DiffusionModel make_model(const std::string& model_id) {
  const auto colon = model_id.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("make_model: bad model id '" + model_id + "' (expected name:param)");
  const std::string name = model_id.substr(0, colon);
  const std::string param_text = model_id.substr(colon + 1);
  std::size_t used = 0;
  double param = 0.0;
  try {
    param = std::stod(param_text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("make_model: bad parameter in '" + model_id + "'");
  }
  if (used != param_text.size())
    throw std::invalid_argument("make_model: trailing junk in '" + model_id + "'");
  if (name == "cosine") return make_cosine_model(param);
  if (name == "ou") return make_ou_model(param);
  throw std::invalid_argument("make_model: unknown model family '" + name + "'");
}

}  // namespace sdeclass
