from pydantic import BaseModel, Field, field_validator
from typing import Dict, List, Literal, Optional

# Surface schemas
class SurfaceRequest(BaseModel):
    g: int = Field(ge=1)
    b: int = Field(ge=1)

class WordRequest(SurfaceRequest):
    word: str

    @field_validator("word")
    @classmethod
    def word_not_blank(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("word must not be blank; use '1' for the identity")
        return value

# Membership schemas
class Profile(BaseModel):
    O: List[int]
    E: List[int]

class GammaResponse(BaseModel):
    member: bool
    profile: Optional[Profile] = None
    p_length: int

class NormalFormResponse(BaseModel):
    v: List[int]
    parity: int

# Homology schemas
class ActionResponse(BaseModel):
    basis: List[str]
    matrix: List[List[int]]
    identity: bool

class CorrectionRequest(SurfaceRequest):
    n: List[int]

class CorrectionResponse(BaseModel):
    twists: List[List[int]]
    matrix: List[List[int]]
    verified: bool

# Certificate schemas
class RelatorSchema(BaseModel):
    family: Literal["Square", "Ykill", "PairCommutator", "TripleSquare"]
    indices: List[int]

class CertificateEntrySchema(BaseModel):
    conj: str = "1"
    relator: RelatorSchema
    exp: Literal[1, -1] = 1

class VerifyCertificateRequest(WordRequest):
    certificate: List[CertificateEntrySchema]

class VerifyCertificateResponse(BaseModel):
    valid: bool

class ConvertRequest(BaseModel):
    relator: RelatorSchema
    target: Literal["PairCommutator", "TripleSquare"]

# Presentation schemas
class PresentationResponse(BaseModel):
    generators: List[str]
    relators: List[str]
    expansions: Dict[str, str] = {}

# Catalog schemas
class LiftSchema(BaseModel):
    word: str
    lift: str

class FactorSchema(BaseModel):
    name: str
    exp: int

class ProductSchema(BaseModel):
    target: str
    prefix: List[str]
    prefix_exponent: int
    factors: List[FactorSchema]

class CatalogResponse(BaseModel):
    generators: List[str]
    lifts: List[LiftSchema]
    products: List[ProductSchema]

# Service schemas
class HealthResponse(BaseModel):
    status: str
    timestamp: str

class StatusResponse(BaseModel):
    name: str
    version: str
    debug: bool
    endpoints: List[str]

class ErrorResponse(BaseModel):
    detail: str
    error: str
