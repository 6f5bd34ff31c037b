from typing import Annotated, Literal

from pydantic import BaseModel, Field, TypeAdapter


class CharPolyDescriptorDTO(BaseModel):
    type: Literal["charpoly"] = "charpoly"
    k: int = Field(..., ge=1)


class TraceWordDescriptorDTO(BaseModel):
    type: Literal["traceword"] = "traceword"
    r: int = Field(..., ge=0)
    s: int = Field(..., ge=0)


InvariantDescriptorDTO = Annotated[
    CharPolyDescriptorDTO | TraceWordDescriptorDTO,
    Field(discriminator="type"),
]

invariant_descriptors = TypeAdapter(list[InvariantDescriptorDTO])
