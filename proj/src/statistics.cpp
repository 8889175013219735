#include "symrep/statistics.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace symrep {

void CompensatedSum::add(double x)
{
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        carry_ += (sum_ - t) + x;
    else
        carry_ += (x - t) + sum_;
    sum_ = t;
}

Summary summarize(const std::vector<double>& xs)
{
    Summary s;
    s.count = xs.size();
    if (xs.empty())
        return s;
    CompensatedSum total;
    s.min = s.max = xs[0];
    for (double x : xs) {
        total.add(x);
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        s.max_abs = std::max(s.max_abs, std::abs(x));
    }
    s.mean = total.value() / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        CompensatedSum sq;
        for (double x : xs)
            sq.add((x - s.mean) * (x - s.mean));
        s.variance = sq.value() / static_cast<double>(xs.size() - 1);
    }
    return s;
}

double correlation(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("correlation needs two samples of equal size >= 2");
    Summary sa = summarize(a), sb = summarize(b);
    CompensatedSum cov;
    for (std::size_t i = 0; i < a.size(); ++i)
        cov.add((a[i] - sa.mean) * (b[i] - sb.mean));
    double denom = std::sqrt(sa.variance * sb.variance) * static_cast<double>(a.size() - 1);
    return denom == 0 ? 0.0 : cov.value() / denom;
}

double normal_cdf(double x, double sd) { return 0.5 * std::erfc(-x / (sd * std::sqrt(2.0))); }

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf)
{
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size());
    double d = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x)
            ++i;
        while (j < b.size() && b[j] <= x)
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double chi_square_pvalue(double stat, int dof)
{
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = count;
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int n = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (int t = 0; t < n; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace symrep
