"""FastAPI service wrapping the exact-arithmetic core.

Every endpoint is a pure computation; input validation failures (bad
words, malformed monomials, out-of-range bounds) come back as 422 with a
diagnostic naming the first invalid position where applicable.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, blockpoly, blocks, verify, wordops
from ..cpoly import CPoly, InexactDivision, parse_monomial
from . import schemas

app = FastAPI(
    title="blockalg",
    version=__version__,
    description=(
        "Exact computations with block decompositions of binary words, "
        "block-graded generator polynomials and their brackets, formal "
        "coactions, and batch relation verification."
    ),
)


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(InexactDivision)
async def _inexact_handler(request: Request, exc: InexactDivision) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": f"inexact division: {exc}"})


@app.get("/", response_model=schemas.ServiceInfo)
def info() -> schemas.ServiceInfo:
    return schemas.ServiceInfo(
        name="blockalg", version=__version__, suites=list(verify.SUITE_NAMES)
    )


@app.post("/decompose", response_model=schemas.DecomposeResponse)
def decompose(req: schemas.WordRequest) -> schemas.DecomposeResponse:
    w = req.word
    t = blocks.bl(w)
    return schemas.DecomposeResponse(
        word=w,
        blocks=blocks.block_decompose(w),
        epsilon=t.epsilon,
        lengths=list(t.lengths),
        tuple_repr=str(t),
        block_degree=blocks.block_degree(w),
        framed_block_degree=blocks.framed_block_degree(w),
        weight=blocks.weight(w),
        depth=blocks.depth(w),
    )


def _monomial_str(poly: CPoly) -> str:
    exps = next(iter(poly.terms()))[0]
    return "*".join(
        f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e
    )


@app.post("/pibl", response_model=schemas.PiblResponse)
def pibl(req: schemas.WordRequest) -> schemas.PiblResponse:
    poly = blocks.pi_bl(req.word)
    return schemas.PiblResponse(
        word=req.word,
        monomial=_monomial_str(poly),
        polynomial=schemas.PolynomialModel.from_cpoly(poly),
    )


@app.post("/pibl/invert", response_model=schemas.InvertResponse)
def pibl_invert(req: schemas.InvertRequest) -> schemas.InvertResponse:
    poly = parse_monomial(req.monomial)
    word = blocks.pi_bl_inverse(poly)
    return schemas.InvertResponse(monomial=req.monomial, word=word)


@app.post("/generator", response_model=schemas.GeneratorResponse)
def generator(req: schemas.GeneratorRequest) -> schemas.GeneratorResponse:
    k = (req.weight - 1) // 2
    if req.as_q and req.reduced:
        raise ValueError("choose at most one of as_q and reduced")
    if req.as_q:
        poly, form = blockpoly.half_generator(k), "one-sided"
    elif req.reduced:
        poly, form = blockpoly.reduced_generator(k), "reduced"
    else:
        poly, form = blockpoly.generator_poly(k), "full"
    return schemas.GeneratorResponse(
        weight=req.weight,
        k=k,
        form=form,
        polynomial=schemas.PolynomialModel.from_cpoly(poly),
        rendered=str(poly),
    )


@app.post("/bracket", response_model=schemas.BracketResponse)
def bracket(req: schemas.BracketRequest) -> schemas.BracketResponse:
    weights = req.weights
    acc = blockpoly.generator_poly((weights[0] - 1) // 2)
    for w in weights[1:]:
        acc = blockpoly.ihara_bracket(acc, blockpoly.generator_poly((w - 1) // 2))
    total_weight = sum(weights)
    degree = len(weights)
    if req.reduced and not acc.is_zero():
        acc = blockpoly.reduce_block_poly(acc)
    return schemas.BracketResponse(
        weights=weights,
        reduced=req.reduced,
        weight=total_weight,
        block_degree=degree,
        polynomial=schemas.PolynomialModel.from_cpoly(acc),
        rendered=str(acc),
    )


@app.post("/coaction", response_model=schemas.CoactionResponse)
def coaction(req: schemas.CoactionRequest) -> schemas.CoactionResponse:
    symbol = wordops.FormalII("0", req.word, "1")
    terms = wordops.infinitesimal_coaction(req.r, symbol)
    return schemas.CoactionResponse(
        word=req.word,
        r=req.r,
        count=len(terms),
        terms=[
            schemas.CoactionTermModel(
                coeff=str(t.coeff), left=str(t.left), right=str(t.right)
            )
            for t in terms
        ],
    )


@app.get("/dims", response_model=schemas.DimsResponse)
def dims(max_weight: int = 13, max_block_degree: int = 3) -> schemas.DimsResponse:
    if max_weight < 1 or max_weight > 40:
        raise ValueError("max_weight must be between 1 and 40")
    if max_block_degree < 1 or max_block_degree > 6:
        raise ValueError("max_block_degree must be between 1 and 6")
    lyndon = [
        schemas.DimsCellModel(weight=n, block_degree=b, dimension=blockpoly.lyndon_dim(n, b))
        for n in range(3, max_weight + 1)
        for b in range(1, max_block_degree + 1)
        if blockpoly.lyndon_dim(n, b)
    ]
    hoffman = [
        schemas.HoffmanCellModel(weight=n, level=m, count=blocks.hoffman_count(n, m))
        for n in range(1, max_weight + 1)
        for m in range(0, n // 3 + 1)
        if blocks.hoffman_count(n, m)
    ]
    return schemas.DimsResponse(
        max_weight=max_weight,
        max_block_degree=max_block_degree,
        lyndon=lyndon,
        hoffman=hoffman,
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def run_verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    config = verify.VerifyConfig(
        max_weight=req.max_weight,
        max_block_degree=req.max_block_degree,
        suites=tuple(req.suites) if req.suites else verify.SUITE_NAMES,
    )
    reports = verify.full_report(config)
    return schemas.VerifyResponse(
        version=__version__,
        config=config.to_dict(),
        all_pass=all(r.status == "pass" for r in reports),
        reports=[schemas.SuiteReportModel(**r.to_dict()) for r in reports],
    )
