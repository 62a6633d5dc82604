#include "mirrorq/group.hpp"

namespace mirrorq {

Mat4i monodromy_m0() {
    Mat4i m;
    m << 1, 1, 0, 0,
         0, 1, 0, 0,
         5, 5, 1, 0,
         0, -5, -1, 1;
    return m;
}

Mat4i monodromy_m1() {
    Mat4i m;
    m << 1, 0, 0, 0,
         0, 1, 0, 1,
         0, 0, 1, 0,
         0, 0, 0, 1;
    return m;
}

Mat4i form_psi() {
    Mat4i m;
    m << 0, 0, 1, 0,
         0, 0, 0, 1,
         -1, 0, 0, 0,
         0, -1, 0, 0;
    return m;
}

Mat4i form_phi() {
    Mat4i m;
    m << 0, 0, 0, 1,
         0, 0, 1, 0,
         0, -1, 0, 0,
         -1, 0, 0, 0;
    return m;
}

CheckReport check_monodromy_identities() {
    CheckReport rep;
    rep.suite = "monodromy";
    Mat4i m0 = monodromy_m0(), m1 = monodromy_m1(), psi = form_psi();
    Mat4i id = Mat4i::Identity();

    Mat4i p = m0 * m1;
    Mat4i p5 = p * p * p * p * p;
    rep.add("(M0 M1)^5 = I", p5 == id, "exact");
    rep.add("M0^T Psi M0 = Psi", Mat4i(m0.transpose() * psi * m0) == psi, "exact");
    rep.add("M1^T Psi M1 = Psi", Mat4i(m1.transpose() * psi * m1) == psi, "exact");
    Mat4i psi2 = psi * psi;
    rep.add("Psi^2 = -I", psi2 == Mat4i(-id), "exact");
    rep.add("det M0 = det M1 = 1", det4<long>(m0) == 1 && det4<long>(m1) == 1, "exact");
    return rep;
}

}  // namespace mirrorq
