#include "torsor/period.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "abelian/errors.hpp"
#include "koszul/cohomology.hpp"

namespace torsor {

using namespace abelian;

namespace {

PeriodCertificate certificate_for(int m, long budget, bool cross_check_h0) {
    fermat::FermatHomologyModel model = fermat::build_model(m);
    FgAbelianGroup invariants = fermat::invariants_group(model);

    PeriodCertificate cert;
    cert.m = m;
    cert.invariants_factors = invariants.invariant_factors();
    cert.period = invariants.order();

    Int expected = (m % 2 == 1) ? m : m / 2;
    if (cert.period != expected)
        throw InternalError("invariants of degree " + std::to_string(m) + " have order " +
                            cert.period.get_str() + ", expected " + expected.get_str());
    if (cert.invariants_factors != std::vector<Int>{cert.period})
        throw InternalError("invariants of degree " + std::to_string(m) + " are not cyclic");

    if (cross_check_h0) {
        koszul::ModuleWithAction module{model.closed_quotient.group, model.sigma, model.tau};
        Int h0_order = koszul::fixed_points(module).order();
        if (h0_order != cert.period)
            throw InternalError("degree-0 cohomology order " + h0_order.get_str() +
                                " disagrees with the invariants order " + cert.period.get_str() +
                                " at degree " + std::to_string(m));
    }

    if (fermat::quotient_class_count(model) <= budget) {
        FgAbelianGroup scanned = fermat::invariants_bruteforce(model, budget);
        if (scanned.invariant_factors() != cert.invariants_factors)
            throw InternalError("exhaustive scan disagrees with the invariants computation at "
                                "degree " +
                                std::to_string(m));
        cert.oracle_checked = true;
    }

    cert.degree_image_generator = cert.period;
    cert.torsor_group_factors = {cert.period};
    cert.section_classes = m;
    cert.image_index = Int(m) / cert.period;
    return cert;
}

} // namespace

PeriodCertificate compute_period(int m, long budget) {
    if (m < 3)
        throw PreconditionError("period is defined for degree at least 3, got " +
                                std::to_string(m));
    return certificate_for(m, budget, /*cross_check_h0=*/false);
}

std::vector<PeriodCertificate> period_table(int m_from, int m_to, long budget, int parallel) {
    if (m_from < 3 || m_from > m_to)
        throw PreconditionError("degree range must satisfy 3 <= from <= to, got " +
                                std::to_string(m_from) + ".." + std::to_string(m_to));
    int rows = m_to - m_from + 1;
    std::vector<PeriodCertificate> table(rows);
    if (parallel < 1) parallel = 1;
    if (parallel > rows) parallel = rows;

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= rows) return;
            try {
                table[i] = certificate_for(m_from + i, budget, /*cross_check_h0=*/true);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_lock);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (parallel == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < parallel; t++) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

Json encode_certificate(const PeriodCertificate& cert) {
    Json j;
    j["m"] = cert.m;
    j["invariants_factors"] = encode_factors(cert.invariants_factors);
    j["period"] = encode_int(cert.period);
    j["degree_image_generator"] = encode_int(cert.degree_image_generator);
    j["torsor_group_factors"] = encode_factors(cert.torsor_group_factors);
    j["oracle_checked"] = cert.oracle_checked;
    j["section_classes"] = encode_int(cert.section_classes);
    j["image_index"] = encode_int(cert.image_index);
    return j;
}

std::string certificate_csv_header() {
    return "m,period,invariants,degree_image_generator,oracle_checked";
}

std::string certificate_csv_row(const PeriodCertificate& cert) {
    std::ostringstream os;
    os << cert.m << "," << cert.period << ",";
    for (size_t i = 0; i < cert.invariants_factors.size(); i++)
        os << (i ? ";" : "") << cert.invariants_factors[i];
    os << "," << cert.degree_image_generator << "," << (cert.oracle_checked ? "true" : "false");
    return os.str();
}

bool verify_certificate(const Json& stored) {
    if (!stored.is_object() || !stored.contains("m") || !stored["m"].is_number_integer())
        throw PreconditionError("certificate json lacks an integral field 'm'");
    int m = stored["m"].get<int>();
    PeriodCertificate fresh = compute_period(m);
    if (stored.contains("oracle_checked") && stored["oracle_checked"].is_boolean())
        fresh.oracle_checked = stored["oracle_checked"].get<bool>();
    return dump_json(encode_certificate(fresh)) == dump_json(stored);
}

} // namespace torsor
