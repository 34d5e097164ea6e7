"""HTTP wrapper around the construction engine.

Graphs travel as edge-list text, certificates as arc-list text; both use
the same formats as the CLI, so files can be piped through either front end.
"""

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .cli import _construct
from .errors import (
    BudgetError,
    GenerationFailureError,
    MalformedLabelingError,
    ParseError,
    RejectedInstanceError,
    UnsupportedInstanceError,
)
from .generators import FamilySpec, generate
from .graph import (
    format_certificate,
    format_edge_list,
    is_antimagic,
    parse_certificate,
    parse_edge_list,
    vertex_sums,
)
from .oracle import oracle_antimagic_exists

app = FastAPI(title="antimagic")


class ConstructRequest(BaseModel):
    graph: str
    strategy: str = "auto"


class ConstructResponse(BaseModel):
    certificate: str
    strategy: str
    sums: list[int]


class VerifyRequest(BaseModel):
    graph: str
    certificate: str


class VerifyResponse(BaseModel):
    ok: bool
    collision: list[int] | None = None


class OracleRequest(BaseModel):
    graph: str


class OracleResponse(BaseModel):
    exists: bool
    certificate: str | None = None


class GenerateRequest(BaseModel):
    family: str
    params: dict[str, int] = {}
    seed: int = 0


class GenerateResponse(BaseModel):
    graph: str


class BatchRequest(BaseModel):
    family: str
    params: dict[str, int] = {}
    seed: int = 0
    count: int = 1
    strategy: str = "auto"


class BatchItem(BaseModel):
    instance: str
    strategy: str
    ok: bool
    detail: str


class BatchResponse(BaseModel):
    items: list[BatchItem]
    passed: int
    total: int


def _parse_graph(text: str):
    try:
        return parse_edge_list(text)
    except ParseError as e:
        raise HTTPException(status_code=422, detail=str(e))


@app.post("/construct", response_model=ConstructResponse)
def construct(req: ConstructRequest):
    g = _parse_graph(req.graph)
    try:
        orientation, labeling, tag = _construct(g, req.strategy)
    except RejectedInstanceError as e:
        raise HTTPException(status_code=409, detail=str(e))
    except (UnsupportedInstanceError, BudgetError) as e:
        raise HTTPException(status_code=501, detail=str(e))
    return ConstructResponse(
        certificate=format_certificate(orientation, labeling),
        strategy=tag,
        sums=list(vertex_sums(orientation, labeling).sums),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    g = _parse_graph(req.graph)
    try:
        orientation, labeling = parse_certificate(req.certificate, g)
    except (ParseError, MalformedLabelingError) as e:
        raise HTTPException(status_code=422, detail=str(e))
    ok, clash = is_antimagic(orientation, labeling)
    return VerifyResponse(ok=ok, collision=list(clash) if clash else None)


@app.post("/oracle", response_model=OracleResponse)
def oracle(req: OracleRequest):
    g = _parse_graph(req.graph)
    try:
        exists, witness = oracle_antimagic_exists(g)
    except BudgetError as e:
        raise HTTPException(status_code=501, detail=str(e))
    cert = format_certificate(*witness) if witness else None
    return OracleResponse(exists=exists, certificate=cert)


@app.post("/generate", response_model=GenerateResponse)
def generate_graph(req: GenerateRequest):
    try:
        g = generate(FamilySpec(req.family, req.params, req.seed))
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except GenerationFailureError as e:
        raise HTTPException(status_code=501, detail=str(e))
    return GenerateResponse(graph=format_edge_list(g))


@app.post("/batch", response_model=BatchResponse)
def batch(req: BatchRequest):
    items = []
    passed = 0
    for i in range(req.count):
        name = f"{req.family}#{i}"
        try:
            g = generate(FamilySpec(req.family, dict(req.params), req.seed + i))
            orientation, labeling, tag = _construct(g, req.strategy)
            ok, clash = is_antimagic(orientation, labeling)
            items.append(BatchItem(
                instance=name, strategy=tag, ok=ok,
                detail="ok" if ok else f"collision {clash}",
            ))
            if ok:
                passed += 1
        except (RejectedInstanceError, UnsupportedInstanceError, BudgetError,
                GenerationFailureError, ValueError) as e:
            items.append(BatchItem(instance=name, strategy="-", ok=False,
                                   detail=str(e)))
    return BatchResponse(items=items, passed=passed, total=req.count)
