#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ridematch {

// Error categories map to CLI exit codes: config=2, numeric=3, invariant=4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Piecewise-constant arrival rate over wall-clock time, cycling with the
/// given period. A constant profile is a single segment.
class ArrivalProfile {
  public:
    ArrivalProfile() = default;

    static ArrivalProfile constant(double rate) {
        ArrivalProfile p;
        p.edges_ = {0.0};
        p.rates_ = {rate};
        p.period_ = 0.0;
        return p;
    }

    /// Hourly rates in customers/minute; cycles every 24h.
    static ArrivalProfile hourly(const std::vector<double>& rates) {
        if (rates.size() != 24) throw ConfigError("hourly profile needs 24 entries");
        ArrivalProfile p;
        for (int h = 0; h < 24; ++h) {
            p.edges_.push_back(60.0 * h);
            p.rates_.push_back(rates[h]);
        }
        p.period_ = 1440.0;
        return p;
    }

    bool is_constant() const { return rates_.size() == 1; }

    double rate(double t) const {
        if (rates_.size() == 1) return rates_[0];
        double tau = std::fmod(t, period_);
        if (tau < 0) tau += period_;
        size_t i = rates_.size() - 1;
        while (i > 0 && edges_[i] > tau) --i;
        return rates_[i];
    }

    /// End of the constant-rate interval containing t (absolute time,
    /// +infinity for constant profiles).
    double interval_end(double t) const {
        if (rates_.size() == 1) return std::numeric_limits<double>::infinity();
        double tau = std::fmod(t, period_);
        if (tau < 0) tau += period_;
        size_t i = rates_.size() - 1;
        while (i > 0 && edges_[i] > tau) --i;
        double end = (i + 1 < edges_.size()) ? edges_[i + 1] : period_;
        return t + (end - tau);
    }

    /// Time average over one period.
    double mean_rate() const {
        if (rates_.size() == 1) return rates_[0];
        double acc = 0;
        for (size_t i = 0; i < rates_.size(); ++i) {
            double end = (i + 1 < edges_.size()) ? edges_[i + 1] : period_;
            acc += rates_[i] * (end - edges_[i]);
        }
        return acc / period_;
    }

    double max_rate() const {
        double m = 0;
        for (double r : rates_) m = std::max(m, r);
        return m;
    }

    const std::vector<double>& rates() const { return rates_; }

  private:
    std::vector<double> edges_;
    std::vector<double> rates_;
    double period_ = 0.0;
};

struct CustomerType {
    int id = 0;  // 1-based
    std::string name;
    double dest_x = 0, dest_y = 0;
    double distance = 0;       // straight-line distance from the source
    double demand_weight = 0;  // relative demand, >= 0
    ArrivalProfile profile;
};

struct EconParams {
    double fare_rate = 1.0;      // currency per unit distance, solo ride
    double share_factor = 1.7;   // per-distance multiplier for a shared vehicle, in (1,2)
    double reward_const = 40.0;  // normalizing reward constant
    double patience_reward_coef = 0.03;    // reneging-rate coefficient on service reward
    double patience_distance_coef = 0.09;  // reneging-rate coefficient on distance
    double penalty_factor = 7.0;           // scales the reneging penalty
    int max_waiting = 5;                   // per-type queue cap N

    void validate() const {
        if (!(share_factor > 1.0 && share_factor < 2.0))
            throw ConfigError("share_factor must lie in (1,2)");
        if (fare_rate <= 0 || reward_const <= 0 || patience_reward_coef <= 0 ||
            patience_distance_coef <= 0 || penalty_factor <= 0)
            throw ConfigError("economic parameters must be positive");
        if (max_waiting < 1) throw ConfigError("max_waiting must be >= 1");
        if (patience_distance_coef <= patience_reward_coef * share_factor * fare_rate)
            throw ConfigError(
                "patience_distance_coef must exceed patience_reward_coef * share_factor * "
                "fare_rate so reneging rates decrease with distance");
    }
};

/// One ride-sharing service: a pair of customer types (equal ids when
/// self-shared) with a stored drop order and all economic parameters.
struct RsService {
    int id = 0;  // 1-based
    int type1 = 0, type2 = 0;
    bool self_shared = false;
    double shared_distance = 0;      // full route length for the shared ride
    double reward_match = 0;         // reward when two customers depart together
    double ns_reward1 = 0, ns_reward2 = 0;      // fallback rewards per type
    double renege_rate1 = 0, renege_rate2 = 0;  // per-minute, in (0,1)
    double penalty1 = 0, penalty2 = 0;          // reneging penalties, >= 0

    int partner_type(int type) const { return type == type1 ? type2 : type1; }
};

struct NetworkSpec {
    std::vector<CustomerType> types;  // indexed by id-1
    double source_x = 0, source_y = 0;

    const CustomerType& type(int id) const { return types.at(id - 1); }
    int count() const { return static_cast<int>(types.size()); }
};

struct ServiceCatalog {
    NetworkSpec network;
    EconParams econ;
    std::vector<RsService> services;             // indexed by id-1
    std::vector<std::vector<int>> by_type;       // type id-1 -> service ids
    std::vector<std::string> rejected;           // diagnostics for dropped pair services

    const RsService& service(int id) const { return services.at(id - 1); }
    int count() const { return static_cast<int>(services.size()); }
    const std::vector<int>& services_for(int type_id) const { return by_type.at(type_id - 1); }
};

/// Counting state (n1, n2) of one service's queues, in the service's stored
/// type order. Two-type services never hold both types; self-shared services
/// use n1 only.
struct SubState {
    int n1 = 0, n2 = 0;
    bool operator==(const SubState&) const = default;
};

struct ActionPair {
    int a1 = 0, a2 = 0;
    bool operator==(const ActionPair&) const = default;
};

struct EtaPair {
    double eta1 = 0, eta2 = 0;
};

/// Hyper-parameters of the value-iteration machinery.
struct SolveParams {
    double damping = 0.999;  // transition-term damping, in [0,1)
    double tol = 1e-6;       // sweep-to-sweep stopping tolerance
    int max_sweeps = 200000;
    int max_doublings = 60;
};

}  // namespace ridematch
