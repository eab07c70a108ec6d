# Find the Cayley-Dickson convention + block convention reproducing Appendix A.
import itertools, random

# quaternion table on basis 1,i,j,k as dicts idx->coeff; represent as 4-vectors
def qmul(x, y):
    # x,y: 4-tuples over int
    a1,b1,c1,d1 = x; a2,b2,c2,d2 = y
    return (a1*a2 - b1*b2 - c1*c2 - d1*d2,
            a1*b2 + b1*a2 + c1*d2 - d1*c2,
            a1*c2 - b1*d2 + c1*a2 + d1*b2,
            a1*d2 + b1*c2 - c1*b2 + d1*a2)

def qconj(x):
    return (x[0], -x[1], -x[2], -x[3])

def qadd(x,y): return tuple(p+q for p,q in zip(x,y))
def qneg(x): return tuple(-p for p in x)

# CD product variants: (a,b)(c,d) = (first, second)
# first  = a*c - f1(d,b)   where f1 is one of: d~*b~, in some order/conj combo
# second = f2(d,a) + f3(b,c) with order/conj combos
def make_first(order, cj1, cj2):
    def f(d, b):
        x = qconj(d) if cj1 else d
        y = qconj(b) if cj2 else b
        return qmul(x, y) if order == 0 else qmul(y, x)
    return f

variants1 = [(o,c1,c2) for o in (0,1) for c1 in (0,1) for c2 in (0,1)]

def make_term(order, cj1, cj2):
    def f(u, v):
        x = qconj(u) if cj1 else u
        y = qconj(v) if cj2 else v
        return qmul(x, y) if order == 0 else qmul(y, x)
    return f

# octonion as pair of quaternions; basis:
# e1=(1,0) e2=(i,0) e3=(j,0) e4=(k,0) e5=(0,1) e6=(0,i) e7=(0,j) e8=(0,k)
Q1 = (1,0,0,0); QI=(0,1,0,0); QJ=(0,0,1,0); QK=(0,0,0,1); Q0=(0,0,0,0)
BASIS = [(Q1,Q0),(QI,Q0),(QJ,Q0),(QK,Q0),(Q0,Q1),(Q0,QI),(Q0,QJ),(Q0,QK)]

def omul(x, y, f1, f2, f3):
    a,b = x; c,d = y
    return (qadd(qmul(a,c), qneg(f1(d,b))), qadd(f2(d,a), f3(b,c)))

def ovec(x):
    return x[0] + x[1]

def oconj(x):
    a,b = x
    return (qconj(a), qneg(b))

def from_vec(v):
    return ((v[0],v[1],v[2],v[3]), (v[4],v[5],v[6],v[7]))

def onorm2(x):
    return sum(c*c for c in ovec(x))

# target: Appendix A kappa matrices, as upper-right 8x8 block UR and lower-left LL
# kappa(e_m) = sum of s*E_{i,j}; E_{ij}: entry (i,j)=-1,(j,i)=+1 (1-based)
APP = {
 1: [(-1,1,9),(-1,2,10),(-1,3,11),(-1,4,12),(-1,5,13),(-1,6,14),(-1,7,15),(-1,8,16)],
 2: [(1,1,10),(-1,2,9),(-1,3,12),(1,4,11),(-1,5,14),(1,6,13),(1,7,16),(-1,8,15)],
 3: [(1,1,11),(1,2,12),(-1,3,9),(-1,4,10),(-1,5,15),(-1,6,16),(1,7,13),(1,8,14)],
 4: [(1,1,12),(-1,2,11),(1,3,10),(-1,4,9),(-1,5,16),(1,6,15),(-1,7,14),(1,8,13)],
 5: [(1,1,13),(1,2,14),(1,3,15),(1,4,16),(-1,5,9),(-1,6,10),(-1,7,11),(-1,8,12)],
 6: [(1,1,14),(-1,2,13),(1,3,16),(-1,4,15),(1,5,10),(-1,6,9),(1,7,12),(-1,8,11)],
 7: [(1,1,15),(-1,2,16),(-1,3,13),(1,4,14),(1,5,11),(-1,6,12),(-1,7,9),(1,8,10)],
 8: [(1,1,16),(1,2,15),(-1,3,14),(-1,4,13),(1,5,12),(1,6,11),(-1,7,10),(-1,8,9)],
}
def target_blocks(m):
    UR = [[0]*8 for _ in range(8)]  # rows 1-8, cols 9-16
    LL = [[0]*8 for _ in range(8)]  # rows 9-16, cols 1-8
    for s, i, j in APP[m]:
        # E_{ij}: (i,j) entry = -1, (j,i) = +1; here i<=8<j always
        UR[i-1][j-9] += -s
        LL[j-9][i-1] += s
    return UR, LL

TGT = {m: target_blocks(m) for m in range(1,9)}

random.seed(1)
pairs = [(from_vec([random.randint(-2,2) for _ in range(8)]),
          from_vec([random.randint(-2,2) for _ in range(8)])) for _ in range(4)]

found = []
for v1 in variants1:
    f1 = make_first(*v1)
    for v2 in variants1:
        f2 = make_term(*v2)
        for v3 in variants1:
            f3 = make_term(*v3)
            mul = lambda x,y: omul(x,y,f1,f2,f3)
            # quick sanity: unit, norm multiplicativity
            if ovec(mul(BASIS[1], BASIS[2])) != ovec(BASIS[3]):  # i*j = k
                continue
            ok = True
            for x,y in pairs:
                if onorm2(mul(x,y)) != onorm2(x)*onorm2(y):
                    ok = False; break
                if ovec(mul(x,BASIS[0])) != ovec(x) or ovec(mul(BASIS[0],x)) != ovec(x):
                    ok = False; break
            if not ok:
                continue
            # R_u and L_u matrices for u = each basis
            def rmat(u):
                M = [[0]*8 for _ in range(8)]
                for b in range(8):
                    w = ovec(mul(BASIS[b], u))
                    for a in range(8):
                        M[a][b] = w[a]
                return M
            def lmat(u):
                M = [[0]*8 for _ in range(8)]
                for b in range(8):
                    w = ovec(mul(u, BASIS[b]))
                    for a in range(8):
                        M[a][b] = w[a]
                return M
            def T(M): return [list(r) for r in zip(*M)]
            def neg(M): return [[-x for x in r] for r in M]
            # candidate block functions
            def blocks(u):
                uc = oconj(u)
                R, Rc, L, Lc = rmat(u), rmat(uc), lmat(u), lmat(uc)
                cands = {}
                for name, M in (("R",R),("Rc",Rc),("L",L),("Lc",Lc)):
                    cands[name] = M
                    cands[name+"t"] = T(M)
                    cands["-"+name] = neg(M)
                    cands["-"+name+"t"] = neg(T(M))
                return cands
            allb = [blocks(BASIS[m]) for m in range(8)]
            names = list(allb[0].keys())
            for na in names:
                if any(allb[m][na] != TGT[m+1][0] for m in range(8)):
                    continue
                for nb in names:
                    if all(allb[m][nb] == TGT[m+1][1] for m in range(8)):
                        found.append((v1,v2,v3,na,nb))

print(len(found), "matches")
for f in found[:20]:
    print(f)
