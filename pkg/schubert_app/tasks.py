from typing import Optional

from config.celery import app


@app.task
def verify_element(identity: str, family: str, rank: int, word: Optional[str], allow_large: bool, seed: int) -> dict:
    """
    Проверка одного тождества для одного элемента группы Вейля, результат в виде JSON отчёта
    """
    from cli_app.services.identities import verify_one

    return verify_one(identity, family, rank, word, allow_large, seed)
